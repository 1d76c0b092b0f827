#include "kgbound/special_cases.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "branch_solve.hpp"

namespace kgb {

namespace {

struct CaseInfo {
  SpecialCase id;
  const char* name;
};

constexpr CaseInfo kCases[] = {
    {SpecialCase::eckart, "eckart"},
    {SpecialCase::hulthen, "hulthen"},
    {SpecialCase::hulthen_yukawa, "hulthen_yukawa"},
    {SpecialCase::class_yukawa, "class_yukawa"},
    {SpecialCase::kratzer_fues, "kratzer_fues"},
    {SpecialCase::central_yukawa, "central_yukawa"},
    {SpecialCase::inverse_quadratic_yukawa, "inverse_quadratic_yukawa"},
    {SpecialCase::coulomb, "coulomb"},
    {SpecialCase::s_wave, "s_wave"},
};

double checked_root(double radicand, const char* what) {
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << what << " radicand is negative: " << radicand;
    throw NonRealError(msg.str());
  }
  return std::sqrt(radicand);
}

// Every implicit case reads M^2 - E^2 = delta^2 (num/den)^2 with den > 0.
struct Fraction {
  double num;
  double den;
};

Fraction case_fraction(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx, int k,
                       int l, double e) {
  const double m = ctx.mass;
  if (!(std::fabs(e) <= m)) throw DomainError("special-case condition needs |E| <= M");
  const double d = p.delta();
  const double epm = e + m;
  const double ll = static_cast<double>(l) * (l + 1);
  const double kk = static_cast<double>(k) * (k + 1);
  const double xi_sq = 4.0 * d * p.v3() * epm / (4.0 * d * d);
  const double zeta_sq = -2.0 * p.v4() * epm;
  switch (c) {
    case SpecialCase::eckart: {
      const double b2 = epm / (2.0 * d * d) * p.v1();
      const double eta_sq = 2.0 * epm * p.v2() / (4.0 * d * d);
      const double kw = k + 0.5 + checked_root(0.25 + ll + eta_sq, "omega");
      return {b2 - kw * kw, kw};
    }
    case SpecialCase::hulthen: {
      const double b2 = epm / (2.0 * d * d) * p.v1();
      const double kw = k + l + 1.0;
      return {b2 - kw * kw, kw};
    }
    case SpecialCase::hulthen_yukawa: {
      const double b2 = 2.0 * epm * (p.v1() + 2.0 * d * p.v3()) / (4.0 * d * d);
      const double kw = k + l + 1.0;
      return {b2 - kw * kw, kw};
    }
    case SpecialCase::class_yukawa: {
      const double root = checked_root(0.25 + ll + zeta_sq, "omega");
      return {xi_sq - 0.5 - ll - kk - (2.0 * k + 1.0) * root, k + 0.5 + root};
    }
    case SpecialCase::central_yukawa:
      return {xi_sq - 0.5 - ll - kk - (2.0 * k + 1.0) * (l + 0.5), k + l + 1.0};
    case SpecialCase::inverse_quadratic_yukawa: {
      const double root = checked_root(0.25 + zeta_sq + ll, "omega");
      return {-0.5 - ll - kk - (2.0 * k + 1.0) * root, k + 0.5 + root};
    }
    case SpecialCase::s_wave: {
      const double scale = 2.0 * epm / (4.0 * d * d);
      const auto& a = p.alpha();
      const double b2 = scale * a.alpha1;
      const double g2 = scale * a.alpha3;
      const double h2 = scale * a.alpha2;
      const double kw = k + 0.5 + checked_root(0.25 + g2 + h2, "omega");
      return {b2 + g2 - kw * kw, kw};
    }
    case SpecialCase::coulomb:
    case SpecialCase::kratzer_fues:
      break;
  }
  throw DomainError(to_string(c) + " has no implicit residual of this form");
}

void require_zero(double v, const char* name, SpecialCase c) {
  if (v != 0.0) {
    std::ostringstream msg;
    msg << to_string(c) << " requires " << name << " = 0, got " << v;
    throw DomainError(msg.str());
  }
}

double solve_case(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                  const QuantumNumbers& qn, const SolveOptions& opts) {
  const int k = quantization_index(qn, opts.convention);
  const detail::PartialFunction residual = [&](double e) -> std::optional<double> {
    try {
      return special_case_residual(c, p, ctx, k, qn.l, e);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  const detail::PartialFunction bracket = [&](double e) -> std::optional<double> {
    try {
      return special_case_bracket(c, p, ctx, k, qn.l, e);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  return detail::solve_on_branch(residual, bracket, ctx.mass, opts,
                                 qn.label() + " in the " + to_string(c) + " case");
}

}  // namespace

std::string to_string(SpecialCase c) {
  for (const auto& info : kCases) {
    if (info.id == c) return info.name;
  }
  return "unknown";
}

SpecialCase parse_special_case(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto& info : kCases) {
    if (key == info.name) return info.id;
  }
  std::string list;
  for (const auto& info : kCases) list += std::string(list.empty() ? "" : ", ") + info.name;
  throw DomainError("unknown special case '" + name + "' (one of: " + list + ")");
}

const std::vector<SpecialCase>& all_special_cases() {
  static const std::vector<SpecialCase> cases = [] {
    std::vector<SpecialCase> v;
    for (const auto& info : kCases) v.push_back(info.id);
    return v;
  }();
  return cases;
}

void check_restriction(SpecialCase c, const PotentialParams& p, const QuantumNumbers& qn) {
  switch (c) {
    case SpecialCase::eckart:
      require_zero(p.v3(), "V3", c);
      require_zero(p.v4(), "V4", c);
      break;
    case SpecialCase::hulthen:
      require_zero(p.v2(), "V2", c);
      require_zero(p.v3(), "V3", c);
      require_zero(p.v4(), "V4", c);
      break;
    case SpecialCase::hulthen_yukawa:
      require_zero(p.v2(), "V2", c);
      require_zero(p.v4(), "V4", c);
      break;
    case SpecialCase::class_yukawa:
      require_zero(p.v1(), "V1", c);
      require_zero(p.v2(), "V2", c);
      break;
    case SpecialCase::kratzer_fues:
      require_zero(p.v1(), "V1", c);
      require_zero(p.v2(), "V2", c);
      (void)KratzerParams::from_strengths(p.v3(), p.v4());
      break;
    case SpecialCase::central_yukawa:
    case SpecialCase::coulomb:
      require_zero(p.v1(), "V1", c);
      require_zero(p.v2(), "V2", c);
      require_zero(p.v4(), "V4", c);
      break;
    case SpecialCase::inverse_quadratic_yukawa:
      require_zero(p.v1(), "V1", c);
      require_zero(p.v2(), "V2", c);
      require_zero(p.v3(), "V3", c);
      break;
    case SpecialCase::s_wave:
      if (qn.l != 0) throw DomainError("s_wave requires l = 0");
      break;
  }
}

PotentialParams restrict_params(SpecialCase c, const PotentialParams& p) {
  double v1 = p.v1(), v2 = p.v2(), v3 = p.v3(), v4 = p.v4();
  switch (c) {
    case SpecialCase::eckart:
      v3 = v4 = 0.0;
      break;
    case SpecialCase::hulthen:
      v2 = v3 = v4 = 0.0;
      break;
    case SpecialCase::hulthen_yukawa:
      v2 = v4 = 0.0;
      break;
    case SpecialCase::class_yukawa:
    case SpecialCase::kratzer_fues:
      v1 = v2 = 0.0;
      break;
    case SpecialCase::central_yukawa:
    case SpecialCase::coulomb:
      v1 = v2 = v4 = 0.0;
      break;
    case SpecialCase::inverse_quadratic_yukawa:
      v1 = v2 = v3 = 0.0;
      break;
    case SpecialCase::s_wave:
      break;
  }
  return PotentialParams::make(v1, v2, v3, v4, p.delta());
}

double special_case_residual(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                             int k, int l, double energy) {
  const Fraction f = case_fraction(c, p, ctx, k, l, energy);
  const double m = ctx.mass;
  const double t = p.delta() * f.num / f.den;
  return (m - energy) * (m + energy) - t * t;
}

double special_case_bracket(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                            int k, int l, double energy) {
  return case_fraction(c, p, ctx, k, l, energy).num;
}

double special_case_energy(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const SolveOptions& opts) {
  ctx.validate();
  check_restriction(c, p, qn);
  if (c == SpecialCase::coulomb) return coulomb_energy(p.v3(), ctx, qn);
  if (c == SpecialCase::kratzer_fues) {
    return kratzer_fues_energy(KratzerParams::from_strengths(p.v3(), p.v4()), ctx, qn, opts);
  }
  return solve_case(c, p, ctx, qn, opts);
}

double coulomb_energy(double v3, const PhysicalContext& ctx, const QuantumNumbers& qn) {
  ctx.validate();
  if (!std::isfinite(v3)) throw DomainError("V3 must be finite");
  const double n = 1.0 + qn.n_r + qn.l;
  const double n2 = n * n;
  const double v2 = v3 * v3;
  return ctx.mass * (n2 - v2) / (n2 + v2);
}

KratzerParams KratzerParams::make(double r_e, double d_e) {
  if (!(r_e > 0.0) || !(d_e > 0.0) || !std::isfinite(r_e) || !std::isfinite(d_e)) {
    throw DomainError("Kratzer-Fues needs r_e > 0 and D_e > 0");
  }
  return KratzerParams{r_e, d_e};
}

KratzerParams KratzerParams::from_strengths(double v3, double v4) {
  if (!(v3 > 0.0) || !(v4 < 0.0)) {
    throw DomainError("Kratzer-Fues strengths need V3 > 0 and V4 < 0");
  }
  return make(-2.0 * v4 / v3, v3 * v3 / (-4.0 * v4));
}

double kratzer_fues_residual(const KratzerParams& kp, const PhysicalContext& ctx, int k, int l,
                             double energy) {
  const double m = ctx.mass;
  if (!(std::fabs(energy) <= m)) throw DomainError("Kratzer-Fues condition needs |E| <= M");
  const double epm = energy + m;
  const double ll = static_cast<double>(l) * (l + 1);
  const double two_l1 = 2.0 * l + 1.0;
  const double re2de = kp.r_e * kp.r_e * kp.d_e;
  const double den = ll + static_cast<double>(k) * (k + 1) + 0.5 + 2.0 * re2de * epm +
                     (k + 0.5) * std::sqrt(two_l1 * two_l1 + 8.0 * re2de * epm);
  const double c = 2.0 * kp.r_e * kp.d_e * epm;
  return (m - energy) * (m + energy) - c * c / den;
}

double kratzer_fues_energy(const KratzerParams& kp, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const SolveOptions& opts) {
  ctx.validate();
  const detail::PartialFunction residual = [&](double e) -> std::optional<double> {
    return kratzer_fues_residual(kp, ctx, qn.n_r, qn.l, e);
  };
  const detail::PartialFunction positive = [](double) -> std::optional<double> { return 1.0; };
  SolveOptions o = opts;
  o.convention = LevelConvention::physical;
  return detail::solve_on_branch(residual, positive, ctx.mass, o,
                                 qn.label() + " in the kratzer_fues case");
}

}  // namespace kgb
