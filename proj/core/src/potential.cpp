#include "kgbound/potential.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "kgbound/csv.hpp"

namespace kgb {

namespace {

void require_positive_radius(double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive, got " + std::to_string(r));
}

// s/(1-s) and s/(1-s)^2 for s = e^{-x}, with 1-s = -expm1(-x).
struct ExpRatios {
  double s;
  double one_minus_s;
};

ExpRatios exp_ratios(double x) { return {std::exp(-x), -std::expm1(-x)}; }

}  // namespace

double eval_exact(const PotentialParams& p, double r) {
  require_positive_radius(r);
  const auto [y, one_minus_y] = exp_ratios(r / p.b());
  const double eckart =
      -p.v1() * y / one_minus_y + p.v2() * y / (one_minus_y * one_minus_y);
  const double yukawa = -p.v3() * std::exp(-p.delta() * r) / r -
                        p.v4() * std::exp(-2.0 * p.delta() * r) / (r * r);
  return eckart + yukawa;
}

double eval_approx(const PotentialParams& p, double r) {
  require_positive_radius(r);
  const auto [s, one_minus_s] = exp_ratios(2.0 * p.delta() * r);
  const auto& a = p.alpha();
  const double q = s / one_minus_s;
  return -a.alpha1 * q + (a.alpha2 + a.alpha3 * s) * q / one_minus_s;
}

double centrifugal_approx(double delta, double r) {
  require_positive_radius(r);
  const auto [s, one_minus_s] = exp_ratios(2.0 * delta * r);
  return 4.0 * delta * delta * s / (one_minus_s * one_minus_s);
}

EckartMinimum eckart_minimum(const PotentialParams& p) {
  const double v1 = p.v1();
  const double v2 = p.v2();
  if (!(v1 > v2) || !(v2 > 0.0)) {
    throw DomainError("the Eckart term has a minimum only for V1 > V2 > 0");
  }
  const double b = p.b();
  const double r0 = b * std::log((v1 + v2) / (v1 - v2));
  const double v_min = -(v1 - v2) * (v1 - v2) / (4.0 * v2);
  const double diff_sq = v1 * v1 - v2 * v2;
  const double force_constant = diff_sq * diff_sq / (8.0 * v2 * v2 * v2 * b * b);
  return {r0, v_min, force_constant};
}

double effective_potential(const PotentialParams& p, const PhysicalContext& ctx, double energy,
                           int l, double r) {
  require_positive_radius(r);
  const double coupling = 2.0 * (energy + ctx.mass);
  const double centrifugal = static_cast<double>(l) * (l + 1) * centrifugal_approx(p.delta(), r);
  return coupling * eval_approx(p, r) + centrifugal;
}

std::vector<double> make_radius_grid(double r_min, double r_max, int points, GridSpacing spacing) {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (!(r_min > 0.0) || !(r_max >= r_min)) throw DomainError("grid needs 0 < r_min <= r_max");
  std::vector<double> grid(static_cast<std::size_t>(points));
  if (points == 1) {
    grid[0] = r_min;
    return grid;
  }
  const double last = points - 1;
  if (spacing == GridSpacing::logarithmic) {
    const double lo = std::log(r_min);
    const double hi = std::log(r_max);
    for (int i = 0; i < points; ++i) grid[i] = std::exp(lo + (hi - lo) * (i / last));
  } else {
    for (int i = 0; i < points; ++i) grid[i] = r_min + (r_max - r_min) * (i / last);
  }
  grid.front() = r_min;
  grid.back() = r_max;
  return grid;
}

PotentialProfile make_profile(const PotentialParams& p, std::span<const double> r_grid) {
  PotentialProfile out;
  out.r_grid.assign(r_grid.begin(), r_grid.end());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) {
      throw DomainError("profile grid must be strictly increasing");
    }
    const double e = eval_exact(p, r_grid[i]);
    const double a = eval_approx(p, r_grid[i]);
    out.exact.push_back(e);
    out.approx.push_back(a);
    out.abs_error.push_back(std::fabs(a - e));
  }
  return out;
}

void write_profile_csv(std::ostream& os, const PotentialProfile& profile) {
  CsvWriter csv(os);
  csv.header({"r", "exact", "approx", "abs_error"});
  for (std::size_t i = 0; i < profile.r_grid.size(); ++i) {
    csv.row({profile.r_grid[i], profile.exact[i], profile.approx[i], profile.abs_error[i]});
  }
}

}  // namespace kgb
