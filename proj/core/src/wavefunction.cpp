#include "kgbound/wavefunction.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "kgbound/csv.hpp"
#include "kgbound/potential.hpp"
#include "kgbound/specfun.hpp"

namespace kgb {

using specfun::ln_gamma;

namespace {

struct SCoordinate {
  double s;
  double log_s;
  double one_minus_s;
  double log_one_minus_s;
};

SCoordinate s_coordinate(double delta, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive, got " + std::to_string(r));
  const double x = 2.0 * delta * r;
  SCoordinate c{};
  c.s = std::exp(-x);
  c.log_s = -x;
  c.one_minus_s = -std::expm1(-x);
  c.log_one_minus_s = c.s < 0.5 ? std::log1p(-c.s) : std::log(c.one_minus_s);
  return c;
}

void require_normalizable(const BoundState& state) {
  if (!(state.aux.eps > 0.0) || !(state.aux.omega > 0.5)) {
    throw DomainError("wave function needs eps > 0 and omega > 1/2");
  }
}

// Polynomial factor of the hypergeometric form; its sign is the sign of chi.
double hyp_factor(const BoundState& state, double s) {
  const int n = state.qn.n_r;
  const double eps = state.aux.eps;
  const double omega = state.aux.omega;
  return specfun::hyp2f1_terminating(n, n + 2.0 * eps + 2.0 * omega, 1.0 + 2.0 * eps, s);
}

double norm_log(const BoundState& state) {
  return log_normalization_constant(state.qn.n_r, state.aux.eps, state.aux.omega,
                                    state.params.delta());
}

}  // namespace

double log_normalization_constant(int n_r, double eps, double omega, double delta) {
  if (n_r < 0) throw DomainError("radial number must be non-negative");
  if (!(eps > 0.0) || !(omega > 0.5) || !(delta > 0.0)) {
    throw DomainError("normalization integral diverges unless eps > 0 and omega > 1/2");
  }
  const double n = n_r;
  const double log_c2 = std::log(2.0 * delta) + ln_gamma(n + 1.0) + std::log(n + omega + eps) +
                        ln_gamma(n + 2.0 * eps + 2.0 * omega) + ln_gamma(2.0 * eps + 1.0) -
                        std::log(n + omega) - ln_gamma(2.0 * eps) - ln_gamma(n + 2.0 * eps + 1.0) -
                        ln_gamma(n + 2.0 * omega);
  return 0.5 * log_c2;
}

double normalization_constant(const BoundState& state) {
  require_normalizable(state);
  return std::exp(norm_log(state));
}

double radial_chi(const BoundState& state, double r) {
  require_normalizable(state);
  const auto c = s_coordinate(state.params.delta(), r);
  const double f = hyp_factor(state, c.s);
  if (f == 0.0) return 0.0;
  const int n = state.qn.n_r;
  const double eps = state.aux.eps;
  const double log_amp = norm_log(state) + eps * c.log_s + state.aux.omega * c.log_one_minus_s +
                         ln_gamma(n + 2.0 * eps + 1.0) - ln_gamma(n + 1.0) -
                         ln_gamma(2.0 * eps + 1.0) + std::log(std::fabs(f));
  const double mag = std::exp(log_amp);
  return f < 0.0 ? -mag : mag;
}

double radial_chi_jacobi(const BoundState& state, double r) {
  require_normalizable(state);
  const auto c = s_coordinate(state.params.delta(), r);
  const auto spec = specfun::JacobiSpec::make(state.qn.n_r, 2.0 * state.aux.eps,
                                              2.0 * state.aux.omega - 1.0);
  const double p = specfun::jacobi(spec, c.one_minus_s - c.s);
  if (p == 0.0) return 0.0;
  const double log_amp = norm_log(state) + state.aux.eps * c.log_s +
                         state.aux.omega * c.log_one_minus_s + std::log(std::fabs(p));
  const double mag = std::exp(log_amp);
  return p < 0.0 ? -mag : mag;
}

std::complex<double> total_psi(const BoundState& state, int m, double r, double theta,
                               double phi) {
  if (m < -state.qn.l || m > state.qn.l) throw DomainError("total_psi needs |m| <= l");
  return radial_chi(state, r) / r * specfun::spherical_harmonic(state.qn.l, m, theta, phi);
}

std::vector<WaveSample> sample_grid(const BoundState& state, int m, std::span<const double> r_grid,
                                    std::span<const double> theta_grid, double phi) {
  if (r_grid.empty() || theta_grid.empty()) throw DomainError("sample_grid needs non-empty grids");
  for (double r : r_grid) {
    if (!(r > 0.0)) throw DomainError("sample_grid radii must be positive");
  }
  std::vector<WaveSample> out;
  out.reserve(r_grid.size() * theta_grid.size());
  for (double r : r_grid) {
    const double radial = radial_chi(state, r) / r;
    for (double theta : theta_grid) {
      const auto psi = radial * specfun::spherical_harmonic(state.qn.l, m, theta, phi);
      out.push_back({r, theta, psi, std::norm(psi)});
    }
  }
  return out;
}

std::vector<RadialSample> sample_radial(const BoundState& state, int m,
                                        std::span<const double> r_grid, double theta, double phi) {
  if (r_grid.empty()) throw DomainError("sample_radial needs a non-empty grid");
  const double y2 = std::norm(specfun::spherical_harmonic(state.qn.l, m, theta, phi));
  std::vector<RadialSample> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    const double chi = radial_chi(state, r);
    out.push_back({r, std::exp(-2.0 * state.params.delta() * r), chi, chi * chi / (r * r) * y2});
  }
  return out;
}

void write_wave_csv(std::ostream& os, std::span<const WaveSample> samples) {
  CsvWriter csv(os);
  csv.header({"r", "theta", "re_psi", "im_psi", "density"});
  for (const auto& w : samples) {
    csv.row({w.r, w.theta, w.psi.real(), w.psi.imag(), w.density});
  }
}

NodeReport count_radial_nodes(const BoundState& state, const NodeOptions& opts) {
  require_normalizable(state);
  const double delta = state.params.delta();
  const auto grid = make_radius_grid(opts.r_lo_factor / delta, opts.r_hi_factor / delta,
                                     opts.grid_points, GridSpacing::logarithmic);
  auto sign_at = [&](double r) {
    const double f = hyp_factor(state, std::exp(-2.0 * delta * r));
    return (f > 0.0) - (f < 0.0);
  };
  NodeReport report;
  int prev_sign = 0;
  double prev_r = grid.front();
  for (double r : grid) {
    const int sg = sign_at(r);
    if (sg == 0) continue;
    if (prev_sign != 0 && sg != prev_sign) {
      double lo = prev_r;
      double hi = r;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const int sm = sign_at(mid);
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        (sm == prev_sign ? lo : hi) = mid;
      }
      report.positions.push_back(0.5 * (lo + hi));
    }
    prev_sign = sg;
    prev_r = r;
  }
  report.count = static_cast<int>(report.positions.size());
  return report;
}

}  // namespace kgb
