#include "kgbound/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "kgbound/csv.hpp"
#include "kgbound/oracle.hpp"
#include "kgbound/specfun.hpp"

namespace kgb {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::fabs(sum_) >= std::fabs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_beta(double beta, bool allow_zero) {
  if (!std::isfinite(beta) || beta < 0.0 || (!allow_zero && beta == 0.0)) {
    std::ostringstream msg;
    msg << "inverse temperature must be " << (allow_zero ? "non-negative" : "positive")
        << ", got " << beta;
    throw DomainError(msg.str());
  }
}

// p(x) = (kappa - x^2) / (2x), so E(x) = -A p(x)^2.
double p_of(const NonRelSpectrum& spec, double x) { return (spec.kappa - x * x) / (2.0 * x); }
double q_of(const NonRelSpectrum& spec, double x) { return (spec.kappa + x * x) / (2.0 * x); }

// Boltzmann exponents -beta E_n = beta A p_n^2 and their maximum.
struct Exponents {
  std::vector<double> t;
  double max;
};

Exponents exponents(const NonRelSpectrum& spec, double beta) {
  Exponents e{{}, -INFINITY};
  e.t.reserve(static_cast<size_t>(spec.n_max) + 1);
  for (int n = 0; n <= spec.n_max; ++n) {
    const double v = -beta * nonrel_energy(spec, n);
    e.t.push_back(v);
    e.max = std::max(e.max, v);
  }
  return e;
}

// Shifted endpoint data of the Poisson closed form.
struct PoissonEnds {
  double c;      // sqrt(A beta)
  double abk;    // A beta kappa
  double shift;  // max(A beta p_i^2, 0)
  double p[2], q[2], e[2];
};

PoissonEnds poisson_ends(const NonRelSpectrum& spec, double beta) {
  PoissonEnds d{};
  const double ab = spec.a_scale * beta;
  d.c = std::sqrt(ab);
  d.abk = ab * spec.kappa;
  const double x[2] = {spec.nu, spec.nu + spec.n_max + 1.0};
  double a[2];
  for (int i = 0; i < 2; ++i) {
    d.p[i] = p_of(spec, x[i]);
    d.q[i] = q_of(spec, x[i]);
    a[i] = ab * d.p[i] * d.p[i];
  }
  d.shift = std::max({a[0], a[1], 0.0});
  for (int i = 0; i < 2; ++i) d.e[i] = std::exp(a[i] - d.shift);
  return d;
}

double poisson_numerical_u(const NonRelSpectrum& spec, double beta) {
  const auto lnz = [&](double b) { return log_partition_poisson(spec, b); };
  return -derivative(lnz, beta, 1, std::max(1e-4 * beta, 1e-6));
}

struct Moments {
  double log_z;
  double mean;
  double variance;
};

Moments direct_moments(const NonRelSpectrum& spec, double beta) {
  const auto ex = exponents(spec, beta);
  Accumulator w, we, we2;
  for (int n = 0; n <= spec.n_max; ++n) {
    const double en = nonrel_energy(spec, n);
    const double wn = std::exp(ex.t[static_cast<size_t>(n)] - ex.max);
    w.add(wn);
    we.add(wn * en);
    we2.add(wn * en * en);
  }
  const double mean = we.value() / w.value();
  return {ex.max + std::log(w.value()), mean, std::max(0.0, we2.value() / w.value() - mean * mean)};
}

}  // namespace

NonRelSpectrum NonRelSpectrum::from_values(double kappa, double nu, double a_scale) {
  if (!(a_scale > 0.0) || !std::isfinite(a_scale)) throw DomainError("A must be positive");
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("nu must be positive");
  if (!(kappa > 0.0)) {
    std::ostringstream msg;
    msg << "no bound levels: kappa = " << kappa << " <= 0";
    throw NoBoundStateError(msg.str());
  }
  const double lambda = std::sqrt(kappa) - nu;
  if (lambda < 0.0) {
    std::ostringstream msg;
    msg << "empty spectrum: lambda = sqrt(kappa) - nu = " << lambda << " < 0";
    throw NoBoundStateError(msg.str());
  }
  return NonRelSpectrum{kappa, nu, lambda, cutoff_from_lambda(lambda), a_scale};
}

int cutoff_from_lambda(double lambda) { return static_cast<int>(std::floor(lambda + 0.5)); }

NonRelSpectrum make_nonrel_spectrum(const PotentialParams& p, const PhysicalContext& ctx, int l) {
  ctx.validate();
  if (l < 0) throw DomainError("l must be non-negative");
  const double d = p.delta();
  const double scale = ctx.mu / (d * d * ctx.hbar_c * ctx.hbar_c);
  const auto& a = p.alpha();
  const double kappa = scale * (a.alpha1 + a.alpha3);
  if (!(kappa > 0.0)) {
    std::ostringstream msg;
    msg << "no bound levels: alpha1 + alpha3 = " << a.alpha1 + a.alpha3 << " gives kappa = " << kappa;
    throw NoBoundStateError(msg.str());
  }
  const double radicand = 0.25 + scale * (a.alpha2 + a.alpha3) + static_cast<double>(l) * (l + 1);
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "nu is not real: radicand " << radicand;
    throw NonRealError(msg.str());
  }
  const double a_scale = 2.0 * d * d * ctx.hbar_c * ctx.hbar_c / ctx.mu;
  return NonRelSpectrum::from_values(kappa, 0.5 + std::sqrt(radicand), a_scale);
}

double nonrel_energy(const NonRelSpectrum& spec, int n) {
  if (n < 0 || n > spec.n_max) {
    std::ostringstream msg;
    msg << "level " << n << " is outside [0, " << spec.n_max << "]";
    throw DomainError(msg.str());
  }
  return nonrel_energy_continuous(spec, n);
}

double nonrel_energy_continuous(const NonRelSpectrum& spec, double x) {
  const double p = p_of(spec, x + spec.nu);
  return -spec.a_scale * p * p;
}

std::string to_string(PartitionModel m) { return m == PartitionModel::direct ? "direct" : "poisson"; }

PartitionModel parse_partition_model(const std::string& name) {
  if (name == "poisson") return PartitionModel::poisson;
  if (name == "direct") return PartitionModel::direct;
  throw DomainError("unknown partition model '" + name + "' (use poisson or direct)");
}

double log_partition_direct(const NonRelSpectrum& spec, double beta) {
  require_beta(beta, true);
  const auto ex = exponents(spec, beta);
  Accumulator acc;
  for (double t : ex.t) acc.add(std::exp(t - ex.max));
  return ex.max + std::log(acc.value());
}

double partition_direct(const NonRelSpectrum& spec, double beta) {
  return std::exp(log_partition_direct(spec, beta));
}

double log_partition_poisson(const NonRelSpectrum& spec, double beta) {
  require_beta(beta, false);
  const auto d = poisson_ends(spec, beta);
  double g[2];
  for (int i = 0; i < 2; ++i) {
    const double erfi_p = specfun::erfi_scaled(d.c * d.p[i], d.shift);
    const double erfi_q = specfun::erfi_scaled(d.c * d.q[i], d.shift + d.abk);
    g[i] = 0.5 * d.e[i] + kSqrtPi / (2.0 * d.c) * (erfi_p - erfi_q);
  }
  const double scaled = g[0] - g[1];
  if (!(scaled > 0.0)) {
    throw AccuracyError("Poisson partition function lost all significance", scaled, INFINITY);
  }
  return d.shift + std::log(scaled);
}

double partition_poisson(const NonRelSpectrum& spec, double beta) {
  return std::exp(log_partition_poisson(spec, beta));
}

double partition_poisson_quadrature(const NonRelSpectrum& spec, double beta, double tol) {
  require_beta(beta, false);
  const auto f = [&](double x) { return std::exp(-beta * nonrel_energy_continuous(spec, x)); };
  const double top = spec.n_max + 1.0;
  return 0.5 * (f(0.0) - f(top)) + integrate(f, 0.0, top, tol);
}

double log_partition(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  return model == PartitionModel::direct ? log_partition_direct(spec, beta)
                                         : log_partition_poisson(spec, beta);
}

MeanEnergyTerms mean_energy_terms(const NonRelSpectrum& spec, double beta) {
  require_beta(beta, false);
  const auto d = poisson_ends(spec, beta);
  const double c = d.c;
  const double kappa = spec.kappa;
  // Y1 = Erfi(c q), Y2 = Erfi(c p); both divided by exp(A beta kappa + shift).
  double y1[2], y2[2];
  for (int i = 0; i < 2; ++i) {
    y1[i] = specfun::erfi_scaled(c * d.q[i], d.shift + d.abk);
    y2[i] = specfun::erfi_scaled(c * d.p[i], d.shift);
  }
  const double b1 = d.q[0] * d.q[0];
  const double b2 = d.q[1] * d.q[1];
  const double lambda1 =
      -2.0 * c * c * c * ((b1 - kappa) * d.e[0] - (b2 - kappa) * d.e[1]) +
      2.0 * c * (d.q[0] * d.e[0] - d.q[1] * d.e[1] - d.p[0] * d.e[0] + d.p[1] * d.e[1]) +
      kSqrtPi * ((y2[0] - y2[1]) - (2.0 * d.abk + 1.0) * (y1[0] - y1[1]));
  const double lambda2 = 2.0 * c * beta * (d.e[0] - d.e[1]) -
                         2.0 * kSqrtPi * beta * (y1[0] - y1[1] + y2[1] - y2[0]);
  return {lambda1, lambda2, d.abk + d.shift};
}

double mean_energy(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  if (model == PartitionModel::direct) {
    require_beta(beta, true);
    return direct_moments(spec, beta).mean;
  }
  const auto t = mean_energy_terms(spec, beta);
  const double u = t.lambda1 / t.lambda2;
  if (!std::isfinite(u) || !(t.lambda2 > 0.0)) return poisson_numerical_u(spec, beta);
  return u;
}

double free_energy(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  require_beta(beta, false);
  return -log_partition(spec, beta, model) / beta;
}

double entropy(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  return log_partition(spec, beta, model) + beta * mean_energy(spec, beta, model);
}

double specific_heat(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  if (model == PartitionModel::direct) {
    require_beta(beta, true);
    return beta * beta * direct_moments(spec, beta).variance;
  }
  require_beta(beta, false);
  const auto lnz = [&](double b) { return log_partition_poisson(spec, b); };
  const double h = std::max(1e-4 * beta, 1e-6);
  return beta * beta * derivative(lnz, beta, 2, std::min(h, 0.2 * beta));
}

ThermoPoint thermo_point(const NonRelSpectrum& spec, double beta, PartitionModel model) {
  require_beta(beta, false);
  const double lnz = log_partition(spec, beta, model);
  const double u = mean_energy(spec, beta, model);
  return ThermoPoint{beta, std::exp(lnz), u, -lnz / beta, lnz + beta * u,
                     specific_heat(spec, beta, model)};
}

std::vector<ThermoPoint> thermo_curve(const NonRelSpectrum& spec, std::span<const double> betas,
                                      PartitionModel model) {
  std::vector<ThermoPoint> out;
  out.reserve(betas.size());
  for (double b : betas) out.push_back(thermo_point(spec, b, model));
  return out;
}

std::vector<double> beta_grid(double lo, double hi, int points) {
  if (points < 1) throw DomainError("beta grid needs at least one point");
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("beta grid needs 0 < lo <= hi");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(points));
  if (points == 1) return {lo};
  for (int i = 0; i < points; ++i) {
    out.push_back(i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1.0));
  }
  return out;
}

void write_thermo_csv(std::ostream& os, std::span<const ThermoPoint> curve) {
  CsvWriter csv(os);
  csv.header({"beta", "Z", "U", "F", "S", "C"});
  for (const auto& t : curve) csv.row({t.beta_inv_temp, t.z, t.u, t.f, t.s, t.c});
}

double max_poisson_deviation(const NonRelSpectrum& spec, std::span<const double> betas) {
  double worst = 0.0;
  for (double b : betas) {
    const double zd = partition_direct(spec, b);
    worst = std::max(worst, std::fabs(zd - partition_poisson(spec, b)) / zd);
  }
  return worst;
}

}  // namespace kgb
