#include "kgbound/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "kgbound/wavefunction.hpp"
#include "branch_solve.hpp"

namespace kgb {

std::string to_string(LevelConvention c) {
  return c == LevelConvention::physical ? "physical" : "tabulated";
}

LevelConvention parse_convention(const std::string& name) {
  if (name == "physical") return LevelConvention::physical;
  if (name == "tabulated") return LevelConvention::tabulated;
  throw DomainError("unknown level convention '" + name + "' (use tabulated or physical)");
}

int quantization_index(const QuantumNumbers& qn, LevelConvention convention) {
  return convention == LevelConvention::physical ? qn.n_r : qn.n();
}

AuxParams aux_params(const PotentialParams& p, const PhysicalContext& ctx, double energy, int l) {
  const double m = ctx.mass;
  if (!(std::fabs(energy) <= m)) {
    throw DomainError("aux_params needs |E| <= M");
  }
  const double delta = p.delta();
  const double scale = 2.0 * (energy + m) / (4.0 * delta * delta);
  const auto& a = p.alpha();
  AuxParams aux{};
  // M^2 - E^2 = (M - E)(M + E) avoids cancellation near either threshold.
  aux.eps = std::sqrt((m - energy) * (m + energy)) / (2.0 * delta);
  aux.beta_sq = scale * a.alpha1;
  aux.gamma_sq = scale * a.alpha3;
  aux.eta_sq = scale * a.alpha2;
  const double radicand = 0.25 + aux.gamma_sq + aux.eta_sq + static_cast<double>(l) * (l + 1);
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "omega is not real: 1/4 + gamma^2 + eta^2 + l(l+1) = " << radicand << " at E = " << energy;
    throw NonRealError(msg.str());
  }
  aux.omega = 0.5 + std::sqrt(radicand);
  return aux;
}

double quantization_bracket(const AuxParams& aux, int k) {
  const double kw = k + aux.omega;
  return aux.beta_sq + aux.gamma_sq - kw * kw;
}

double quantization_residual(const PotentialParams& p, const PhysicalContext& ctx, int k, int l,
                             double energy) {
  const AuxParams aux = aux_params(p, ctx, energy, l);
  const double kw = k + aux.omega;
  const double ratio = quantization_bracket(aux, k) / (2.0 * kw);
  const double m = ctx.mass;
  return (m - energy) * (m + energy) - 4.0 * p.delta() * p.delta() * ratio * ratio;
}

double quantization_residual_expanded(const PotentialParams& p, const PhysicalContext& ctx, int k,
                                      int l, double energy) {
  const AuxParams aux = aux_params(p, ctx, energy, l);
  const double ll = static_cast<double>(l) * (l + 1);
  const double root = std::sqrt(0.25 + aux.gamma_sq + aux.eta_sq + ll);
  const double numerator = aux.beta_sq - aux.eta_sq - ll - 0.5 - static_cast<double>(k) * (k + 1) -
                           (2.0 * k + 1.0) * root;
  const double term = numerator / (k + 0.5 + root) * p.delta();
  const double m = ctx.mass;
  return (m - energy) * (m + energy) - term * term;
}

double quantization_residual(const PotentialParams& p, const PhysicalContext& ctx,
                             const QuantumNumbers& qn, double energy, LevelConvention convention) {
  return quantization_residual(p, ctx, quantization_index(qn, convention), qn.l, energy);
}

BoundState make_bound_state(const PotentialParams& p, const PhysicalContext& ctx,
                            const QuantumNumbers& qn, double energy, LevelConvention convention) {
  ctx.validate();
  const AuxParams aux = aux_params(p, ctx, energy, qn.l);
  const double m = ctx.mass;
  const double gap = (m - energy) * (m + energy);
  double norm = std::nan("");
  if (aux.eps > 0.0 && aux.omega > 0.5) {
    norm = std::exp(log_normalization_constant(qn.n_r, aux.eps, aux.omega, p.delta()));
  }
  return BoundState{p, ctx, qn, convention, energy, aux, norm, gap < 1e-10 * m * m, {}, {}};
}

BoundState solve_energy(const PotentialParams& p, const PhysicalContext& ctx,
                        const QuantumNumbers& qn, const SolveOptions& opts) {
  ctx.validate();
  if (qn.n_r < 0 || qn.l < 0) throw DomainError("quantum numbers must be non-negative");
  const double m = ctx.mass;
  const int k = quantization_index(qn, opts.convention);
  const detail::PartialFunction residual = [&](double e) -> std::optional<double> {
    try {
      return quantization_residual(p, ctx, k, qn.l, e);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  const detail::PartialFunction bracket = [&](double e) -> std::optional<double> {
    try {
      return quantization_bracket(aux_params(p, ctx, e, qn.l), k);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  std::ostringstream what;
  what << qn.label() << " (n_r=" << qn.n_r << ", l=" << qn.l << ") at delta=" << p.delta();
  std::vector<RejectedRoot> rejected;
  std::vector<double> alternates;
  const double energy =
      detail::solve_on_branch(residual, bracket, m, opts, what.str(), &rejected, &alternates);
  BoundState state = make_bound_state(p, ctx, qn, energy, opts.convention);
  state.rejected = std::move(rejected);
  state.alternates = std::move(alternates);
  return state;
}

NuParameterSet NuParameterSet::make(double a1, double a2, double a3, double xi1, double xi2,
                                    double xi3) {
  NuParameterSet nu;
  nu.xi1 = xi1;
  nu.xi2 = xi2;
  nu.xi3 = xi3;
  nu.a1 = a1;
  nu.a2 = a2;
  nu.a3 = a3;
  nu.a4 = 0.5 * (1.0 - a1);
  nu.a5 = 0.5 * (a2 - 2.0 * a3);
  nu.a6 = nu.a5 * nu.a5 + xi1;
  nu.a7 = 2.0 * nu.a4 * nu.a5 - xi2;
  nu.a8 = nu.a4 * nu.a4 + xi3;
  nu.a9 = a3 * nu.a7 + a3 * a3 * nu.a8 + nu.a6;
  const double nan = std::nan("");
  const bool real = nu.a8 >= 0.0 && nu.a9 >= 0.0;
  const double r8 = real ? std::sqrt(nu.a8) : nan;
  const double r9 = real ? std::sqrt(nu.a9) : nan;
  nu.a10 = a1 + 2.0 * nu.a4 + 2.0 * r8;
  nu.a11 = a2 - 2.0 * nu.a5 + 2.0 * (r9 + a3 * r8);
  nu.a12 = nu.a4 + r8;
  nu.a13 = nu.a5 - (r9 + a3 * r8);
  return nu;
}

NuParameterSet nu_parameters(const AuxParams& aux, int l) {
  const double eps_sq = aux.eps * aux.eps;
  const double xi1 = aux.beta_sq + aux.gamma_sq + eps_sq;
  const double xi2 = aux.beta_sq - aux.eta_sq + 2.0 * eps_sq - static_cast<double>(l) * (l + 1);
  return NuParameterSet::make(1.0, 1.0, 1.0, xi1, xi2, eps_sq);
}

double nu_condition_residual(const NuParameterSet& nu, int n) {
  if (nu.a8 < 0.0 || nu.a9 < 0.0) {
    throw NonRealError("parametric NU condition needs a8 >= 0 and a9 >= 0");
  }
  const double r8 = std::sqrt(nu.a8);
  const double r9 = std::sqrt(nu.a9);
  const double dn = n;
  return nu.a2 * dn - (2.0 * dn + 1.0) * nu.a5 + dn * (dn - 1.0) * nu.a3 +
         (2.0 * dn + 1.0) * (nu.a3 * r8 + r9) + nu.a7 + 2.0 * nu.a3 * nu.a8 + 2.0 * r8 * r9;
}

}  // namespace kgb
