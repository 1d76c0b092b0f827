#pragma once

/// \file special_cases.hpp
/// Spectra of the potentials contained in the combined model.
///
/// Each implicit case root-solves its own published equation, written with
/// the case's own parameters (xi^2 = V3 (E+M)/delta, zeta^2 = -2 V4 (E+M),
/// and so on) rather than through aux_params, so agreement with the full
/// solver under the same restriction is a cross-check of two code paths.
/// The integer k entering each condition follows the LevelConvention, as in
/// solve_energy.

#include <string>
#include <vector>

#include "kgbound/core.hpp"
#include "kgbound/spectrum.hpp"

namespace kgb {

enum class SpecialCase {
  eckart,                    ///< V3 = V4 = 0
  hulthen,                   ///< V2 = V3 = V4 = 0
  hulthen_yukawa,            ///< V2 = V4 = 0
  class_yukawa,              ///< V1 = V2 = 0
  kratzer_fues,              ///< delta -> 0 of class_yukawa with V3 = 2 r_e D_e, V4 = -r_e^2 D_e
  central_yukawa,            ///< V1 = V2 = V4 = 0
  inverse_quadratic_yukawa,  ///< V1 = V2 = V3 = 0
  coulomb,                   ///< delta -> 0 of central_yukawa
  s_wave,                    ///< l = 0
};

std::string to_string(SpecialCase c);
/// Accepts the enumerator names, with '-' allowed for '_'.
SpecialCase parse_special_case(const std::string& name);
const std::vector<SpecialCase>& all_special_cases();

/// Throws DomainError when (params, qn) violate the case's restriction.
void check_restriction(SpecialCase c, const PotentialParams& p, const QuantumNumbers& qn);

/// params with the strengths the case requires to vanish set to zero.
PotentialParams restrict_params(SpecialCase c, const PotentialParams& p);

/// Residual of the case's own equation at integer k. Not defined for
/// coulomb (closed form) or kratzer_fues (use kratzer_fues_residual).
double special_case_residual(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                             int k, int l, double energy);

/// Sign-carrying bracket of the case's equation; non-negative on the physical branch.
double special_case_bracket(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                            int k, int l, double energy);

/// Energy of `qn` in the reduced potential. Checks the restriction first.
/// coulomb returns the closed form; kratzer_fues maps V3, V4 to (r_e, D_e).
double special_case_energy(SpecialCase c, const PotentialParams& p, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const SolveOptions& opts = {});

/// E = M [(1+n_r+l)^2 - V3^2] / [(1+n_r+l)^2 + V3^2].
double coulomb_energy(double v3, const PhysicalContext& ctx, const QuantumNumbers& qn);

struct KratzerParams {
  double r_e;  ///< equilibrium distance
  double d_e;  ///< dissociation energy

  /// Requires r_e > 0 and d_e > 0.
  static KratzerParams make(double r_e, double d_e);
  /// Inverse of V3 = 2 r_e D_e, V4 = -r_e^2 D_e; needs V3 > 0 and V4 < 0.
  static KratzerParams from_strengths(double v3, double v4);
};

/// (M^2 - E^2) - (2 r_e D_e)^2 (E+M)^2 / [l(l+1) + k(k+1) + 1/2 + 2 r_e^2 D_e (E+M)
///                                       + (k+1/2) sqrt((2l+1)^2 + 8 r_e^2 D_e (E+M))].
double kratzer_fues_residual(const KratzerParams& kp, const PhysicalContext& ctx, int k, int l,
                             double energy);

/// Root of kratzer_fues_residual with k = n_r. The condition has no bracket
/// sign to select on, so the convention is ignored.
double kratzer_fues_energy(const KratzerParams& kp, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const SolveOptions& opts = {});

}  // namespace kgb
