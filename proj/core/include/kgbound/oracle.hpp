#pragma once

/// \file oracle.hpp
/// Independent numerical checks: direct integration of the radial equation,
/// adaptive quadrature and finite-difference derivatives.
///
/// The shooting oracle integrates
///   chi'' = Q(r) chi,   Q = 2(E+M) U(r) + l(l+1) c(r) + M^2 - E^2,
/// with Numerov steps on a uniform grid. In the `approximated` model U is the
/// exponential form of the potential and c(r) = 4 delta^2 e^{-2 delta r}/(1-e^{-2 delta r})^2,
/// which is the equation the analytic spectrum solves. The `exact` model uses
/// the exact potential and 1/r^2 and measures the physical error of those
/// approximations.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kgbound/core.hpp"
#include "kgbound/spectrum.hpp"

namespace kgb {

// ---------------------------------------------------------------------------
// Quadrature and differentiation
// ---------------------------------------------------------------------------

struct QuadratureResult {
  double value;
  double error;
  int evaluations;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b] with |error| <= max(tol, tol*|value|).
/// Throws AccuracyError carrying the best estimate after max_subdivisions.
QuadratureResult integrate_detailed(const std::function<double(double)>& f, double a, double b,
                                    double tol = 1e-10, int max_subdivisions = 4000);
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                 int max_subdivisions = 4000);

/// int_a^inf f via x = a + t/(1-t).
double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol = 1e-10,
                             int max_subdivisions = 4000);

/// Richardson-extrapolated central difference of order 1 or 2 at x with
/// initial step h. Throws DomainError for other orders or h <= 0.
double derivative(const std::function<double(double)>& f, double x, int order, double h);

// ---------------------------------------------------------------------------
// Shooting
// ---------------------------------------------------------------------------

enum class OdeModel { approximated, exact };
std::string to_string(OdeModel m);

struct ShootingConfig {
  double r_min = 1e-6;
  double r_max = 200.0;
  int steps = 100000;
  /// Fallback match point r_min + match_fraction (r_max - r_min) when Q has no turning point.
  double match_fraction = 0.3;
  OdeModel model = OdeModel::approximated;

  /// Throws DomainError unless r_min > 0, r_max > r_min, steps >= 1000, match_fraction in (0,1).
  void validate() const;

  /// Grid scaled to the potential range: r_max = 30/delta (at least 60), steps as given.
  static ShootingConfig for_delta(double delta, int steps = 100000);
};

/// Normalized Wronskian mismatch (u_out' u_in - u_out u_in') / (|u_out| |u_in'| + |u_out'| |u_in|)
/// at the match point, with both solutions carrying their own sign. Zero at
/// eigenvalues and continuous in E.
double shooting_mismatch(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                         const ShootingConfig& cfg);

/// Interior sign changes of the outward solution on (r_min, match point).
int outward_node_count(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                       const ShootingConfig& cfg);

struct NumericState {
  double energy;
  int nodes;        ///< nodes of the glued solution on (r_min, r_max)
  double mismatch;  ///< |mismatch| at the returned energy
};

/// Number of interior nodes of the outward solution over the whole grid.
/// By Sturm oscillation this counts the eigenvalues below E.
int sturm_count(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                const ShootingConfig& cfg);

/// Eigenvalue whose solution has n_r interior nodes. The node count is
/// bisected until it jumps from n_r to n_r+1, then the mismatch root inside
/// that bracket is refined to 1e-13 M. Throws NoBoundStateError if the state
/// does not exist in (-M, M).
NumericState numeric_eigenvalue(const PotentialParams& p, const PhysicalContext& ctx,
                                const QuantumNumbers& qn, const ShootingConfig& cfg);

/// All eigenvalues in (-M, M) for orbital number l, ordered by node count.
std::vector<NumericState> numeric_spectrum(const PotentialParams& p, const PhysicalContext& ctx,
                                           int l, const ShootingConfig& cfg);

struct VerificationRow {
  int n_r;
  int l;
  double delta;
  double e_analytic;
  double e_numeric;
  double abs_diff;
  int nodes;
};

/// Solves every state analytically (physical convention) and numerically.
std::vector<VerificationRow> verify_states(const PotentialParams& base, const PhysicalContext& ctx,
                                           std::span<const double> deltas,
                                           std::span<const QuantumNumbers> states, int steps = 100000);

/// Writes `n_r,l,delta,E_analytic,E_numeric,abs_diff,nodes`.
void write_verification_csv(std::ostream& os, std::span<const VerificationRow> rows);

}  // namespace kgb
