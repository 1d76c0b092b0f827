#pragma once

/// \file spectrum.hpp
/// Relativistic bound-state energies from the implicit quantization condition
///
///   M^2 - E^2 = 4 delta^2 [ (beta^2 + gamma^2 - (k + omega)^2) / (2 (k + omega)) ]^2,
///
/// where beta^2, gamma^2, eta^2 and omega depend on E. Squaring the
/// condition admits two families of roots, distinguished by the sign of the
/// bracket beta^2 + gamma^2 - (k + omega)^2:
///
///  - LevelConvention::physical: k = n_r and the bracket is non-negative.
///    These are the eigenvalues of the radial equation (the unsquared
///    condition sqrt(M^2 - E^2) / (2 delta) = bracket / (2 (k + omega)) holds);
///    the shooting oracle reproduces them.
///  - LevelConvention::tabulated: k = n = n_r + l + 1 and the bracket is
///    negative. This is the family listed in the published reference table
///    of 1s..4f levels; it is reproduced exactly but does not solve the
///    radial equation.

#include <string>
#include <vector>

#include "kgbound/core.hpp"

namespace kgb {

enum class LevelConvention { tabulated, physical };

std::string to_string(LevelConvention c);
/// Accepts "tabulated" or "physical".
LevelConvention parse_convention(const std::string& name);

/// Integer k that enters the quantization condition for a given state.
int quantization_index(const QuantumNumbers& qn, LevelConvention convention);

/// Energy-dependent parameters of the quantization condition.
///
/// gamma_sq carries the sign of alpha3 and is never square-rooted, so V4 > 0
/// (gamma^2 < 0) is handled with real arithmetic.
struct AuxParams {
  double eps;       ///< sqrt(M^2 - E^2) / (2 delta)
  double beta_sq;   ///< 2 (E+M) alpha1 / (4 delta^2)
  double gamma_sq;  ///< 2 (E+M) alpha3 / (4 delta^2)
  double eta_sq;    ///< 2 (E+M) alpha2 / (4 delta^2)
  double omega;     ///< 1/2 + sqrt(1/4 + gamma^2 + eta^2 + l(l+1))
};

/// Throws DomainError for |E| > M and NonRealError when omega is not real.
AuxParams aux_params(const PotentialParams& p, const PhysicalContext& ctx, double energy, int l);

/// beta^2 + gamma^2 - (k + omega)^2. Non-negative on the physical branch.
double quantization_bracket(const AuxParams& aux, int k);

/// Compact residual (M^2 - E^2) - 4 delta^2 [bracket / (2 (k + omega))]^2.
double quantization_residual(const PotentialParams& p, const PhysicalContext& ctx, int k, int l,
                             double energy);

/// The same residual written in the expanded form
///   (M^2 - E^2) - [delta (beta^2 - eta^2 - l(l+1) - 1/2 - k(k+1)
///                 - (2k+1) sqrt(1/4 + gamma^2 + eta^2 + l(l+1))) / (k + 1/2 + sqrt(...))]^2.
double quantization_residual_expanded(const PotentialParams& p, const PhysicalContext& ctx, int k,
                                      int l, double energy);

/// Residual for a state under a convention (k from quantization_index).
double quantization_residual(const PotentialParams& p, const PhysicalContext& ctx,
                             const QuantumNumbers& qn, double energy,
                             LevelConvention convention = LevelConvention::tabulated);

struct SolveOptions {
  LevelConvention convention = LevelConvention::tabulated;
  int scan_points = 4000;
  /// The scan covers (-M + edge*M, M - edge*M).
  double edge = 1e-9;
  /// Roots are refined until |dE| <= tolerance * M.
  double tolerance = 1e-12;
  /// Several admissible roots normally throw only under the physical
  /// convention; the tabulated convention takes the lowest and records the
  /// rest in BoundState::alternates. strict makes both conventions throw.
  bool strict = false;
};

/// A root of the squared condition that failed the branch test.
struct RejectedRoot {
  double energy;
  double bracket;
};

struct BoundState {
  PotentialParams params;
  PhysicalContext context;
  QuantumNumbers qn;
  LevelConvention convention;
  double energy;
  AuxParams aux;
  /// Radial normalization constant; NaN when the normalization integral diverges.
  double norm_const;
  /// M^2 - E^2 < 1e-10 M^2.
  bool near_threshold;
  std::vector<RejectedRoot> rejected;
  /// Further admissible roots passed over by the lowest-root rule.
  std::vector<double> alternates;
};

/// Scans the residual on SolveOptions::scan_points uniform energies, brackets
/// every sign change, refines by bisection with a final Newton step and keeps
/// the roots on the branch selected by the convention.
///
/// Throws NoBoundStateError when no admissible root exists and
/// AmbiguousRootError when more than one does (see SolveOptions::strict).
BoundState solve_energy(const PotentialParams& p, const PhysicalContext& ctx,
                        const QuantumNumbers& qn, const SolveOptions& opts = {});

/// Packages a known energy as a BoundState (aux parameters and normalization).
BoundState make_bound_state(const PotentialParams& p, const PhysicalContext& ctx,
                            const QuantumNumbers& qn, double energy,
                            LevelConvention convention = LevelConvention::tabulated);

// ---------------------------------------------------------------------------
// Parametric Nikiforov-Uvarov quantization condition
// ---------------------------------------------------------------------------

/// Coefficients of the generalized equation
///   chi'' + (a1 - a2 s)/(s (1 - a3 s)) chi' + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - a3 s)^2) chi = 0
/// together with the derived a4..a13. a10..a13 need sqrt(a8) and sqrt(a9) and
/// are NaN when either argument is negative.
class NuParameterSet {
 public:
  static NuParameterSet make(double a1, double a2, double a3, double xi1, double xi2, double xi3);

  double xi1, xi2, xi3;
  double a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13;

 private:
  NuParameterSet() = default;
};

/// Identification a1 = a2 = a3 = 1, xi1 = beta^2 + gamma^2 + eps^2,
/// xi2 = beta^2 - eta^2 + 2 eps^2 - l(l+1), xi3 = eps^2.
NuParameterSet nu_parameters(const AuxParams& aux, int l);

/// a2 n - (2n+1) a5 + n(n-1) a3 + (2n+1)(a3 sqrt(a8) + sqrt(a9)) + a7 + 2 a3 a8 + 2 sqrt(a8 a9).
/// Throws NonRealError when a8 < 0 or a9 < 0.
double nu_condition_residual(const NuParameterSet& nu, int n);

}  // namespace kgb
