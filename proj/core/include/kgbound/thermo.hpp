#pragma once

/// \file thermo.hpp
/// Non-relativistic spectrum and thermodynamic functions.
///
/// The non-relativistic levels are
///   E_n = -A [kappa/(2(n+nu)) - (n+nu)/2]^2,   n = 0..N,
/// with A = 2 delta^2 hbar^2/mu, kappa = mu (alpha1+alpha3)/(delta^2 hbar^2),
/// nu = 1/2 + sqrt(1/4 + mu (alpha2+alpha3)/(delta^2 hbar^2) + l(l+1)) and N
/// the round-half-up of lambda = sqrt(kappa) - nu.
///
/// Two partition-function models are offered. `poisson` is the closed form
/// obtained from the finite Poisson summation formula
///   sum_{n=0}^N f(n) ~ [f(0) - f(N+1)]/2 + int_0^{N+1} f(x) dx,
/// which is what the reference curves use. `direct` sums the N+1 levels.
///
/// With p(x) = (kappa - x^2)/(2x), q(x)^2 = p^2 + kappa and c = sqrt(A beta) the
/// Poisson form collapses to g(nu) - g(nu+N+1),
///   g(x) = e^{A beta p^2} [1/2 + (sqrt(pi)/2c)(Erfi(c p) - e^{-A beta kappa} Erfi(c q))],
/// and every exponential-times-Erfi product is evaluated with erfi_scaled.
///
/// beta here is the inverse temperature; S and C are in units of k_B.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgbound/core.hpp"

namespace kgb {

struct NonRelSpectrum {
  double kappa;
  double nu;
  double lambda_max;  ///< sqrt(kappa) - nu
  int n_max;          ///< N
  double a_scale;     ///< A

  /// Builds from raw values; throws NoBoundStateError unless kappa > 0 and lambda >= 0.
  static NonRelSpectrum from_values(double kappa, double nu, double a_scale);
};

/// Spectrum of orbital number l in the given unit context.
/// Throws NoBoundStateError (kappa <= 0 or lambda < 0) or NonRealError (nu).
NonRelSpectrum make_nonrel_spectrum(const PotentialParams& p, const PhysicalContext& ctx, int l);

/// Round-half-up of lambda.
int cutoff_from_lambda(double lambda);

/// E_n for 0 <= n <= N; throws DomainError above the cutoff.
double nonrel_energy(const NonRelSpectrum& spec, int n);

/// Continuous-index level E(x), used by the Poisson integrand.
double nonrel_energy_continuous(const NonRelSpectrum& spec, double x);

enum class PartitionModel { poisson, direct };
std::string to_string(PartitionModel m);
PartitionModel parse_partition_model(const std::string& name);

/// ln of sum_{n=0}^N exp(-beta E_n), shifted log-sum-exp with compensated summation.
double log_partition_direct(const NonRelSpectrum& spec, double beta);
/// exp(log_partition_direct); beta = 0 returns N+1.
double partition_direct(const NonRelSpectrum& spec, double beta);

/// ln Z of the Poisson closed form; requires beta > 0.
double log_partition_poisson(const NonRelSpectrum& spec, double beta);
double partition_poisson(const NonRelSpectrum& spec, double beta);

/// Right side of the finite Poisson formula with the integral done by adaptive
/// quadrature. Independent check of the closed form.
double partition_poisson_quadrature(const NonRelSpectrum& spec, double beta, double tol = 1e-13);

double log_partition(const NonRelSpectrum& spec, double beta, PartitionModel model);

/// Numerator and denominator of the closed-form mean energy, both divided by
/// exp(A beta kappa + shift) so they stay finite. U = lambda1 / lambda2.
struct MeanEnergyTerms {
  double lambda1;
  double lambda2;
  double log_scale;  ///< the divided-out exponent
};
MeanEnergyTerms mean_energy_terms(const NonRelSpectrum& spec, double beta);

/// U = -d ln Z / d beta. Poisson: closed form, falling back to a numerical
/// derivative if the denominator degenerates. Direct: Boltzmann average.
double mean_energy(const NonRelSpectrum& spec, double beta,
                   PartitionModel model = PartitionModel::poisson);
/// F = -ln Z / beta.
double free_energy(const NonRelSpectrum& spec, double beta,
                   PartitionModel model = PartitionModel::poisson);
/// S = k_B (ln Z + beta U).
double entropy(const NonRelSpectrum& spec, double beta,
               PartitionModel model = PartitionModel::poisson);
/// C = k_B beta^2 d^2 ln Z / d beta^2. Poisson: Richardson-extrapolated 5-point
/// second differences with h = max(1e-4 beta, 1e-6). Direct: beta^2 Var(E).
double specific_heat(const NonRelSpectrum& spec, double beta,
                     PartitionModel model = PartitionModel::poisson);

struct ThermoPoint {
  double beta_inv_temp;
  double z;
  double u;
  double f;
  double s;
  double c;
};

ThermoPoint thermo_point(const NonRelSpectrum& spec, double beta,
                         PartitionModel model = PartitionModel::poisson);
std::vector<ThermoPoint> thermo_curve(const NonRelSpectrum& spec, std::span<const double> betas,
                                      PartitionModel model = PartitionModel::poisson);
/// Uniform grid of `points` values on [lo, hi]; one point gives {lo}.
std::vector<double> beta_grid(double lo, double hi, int points);

/// Writes `beta,Z,U,F,S,C`.
void write_thermo_csv(std::ostream& os, std::span<const ThermoPoint> curve);

/// Largest |Z_direct - Z_poisson| / Z_direct over the grid.
double max_poisson_deviation(const NonRelSpectrum& spec, std::span<const double> betas);

// ---------------------------------------------------------------------------
// Diatomic molecules
// ---------------------------------------------------------------------------

struct MoleculeEntry {
  std::string name;
  double delta;  ///< 1/angstrom
  double mu;     ///< amu

  friend bool operator==(const MoleculeEntry&, const MoleculeEntry&) = default;
};

/// LiH, HCl, CuLi, NiC.
const std::vector<MoleculeEntry>& default_catalog();

/// Parses `name,delta,mu` rows after a header row. Blank lines and lines
/// starting with '#' are skipped. Throws DomainError on malformed rows.
std::vector<MoleculeEntry> load_catalog(std::istream& is);
std::vector<MoleculeEntry> load_catalog_file(const std::string& path);

std::optional<MoleculeEntry> find_molecule(std::span<const MoleculeEntry> catalog,
                                           const std::string& name);

/// Strengths in eV used for molecules unless overridden: V1 = 2 V2 = 44 eV,
/// V3 = V4 = 0 (Eckart only). With the reference strengths
/// V1 = 2V2 = V3 = V4 = 4 eV the molecular kappa is negative.
struct MoleculeStrengths {
  double v1 = 44.0;
  double v2 = 22.0;
  double v3 = 0.0;
  double v4 = 0.0;
};

PhysicalContext molecule_context(const MoleculeEntry& entry);
PotentialParams molecule_params(const MoleculeEntry& entry, const MoleculeStrengths& v);

/// Spectrum in eV / angstrom / amu. Throws NoBoundStateError (with
/// alpha1 + alpha3 in the message) when kappa <= 0.
NonRelSpectrum molecule_spectrum(const MoleculeEntry& entry, const MoleculeStrengths& v, int l);

/// One row of the strength exploration.
struct StrengthProbe {
  std::string molecule;
  double v;            ///< V1 = v, V2 = v/2, V3 = V4 = 0
  double lambda_max;   ///< NaN when kappa <= 0
  int n_max;           ///< -1 when no bound level
};

/// lambda and N at l = 0 for each molecule and each V of the Eckart-only family.
std::vector<StrengthProbe> explore_strengths(std::span<const MoleculeEntry> catalog,
                                             std::span<const double> strengths);

/// Interval of V (Eckart-only family, l = 0) over which N equals `target`,
/// found by bisection on lambda(V) = target -/+ 1/2. nullopt if unreachable.
struct StrengthWindow {
  double v_lo;
  double v_hi;
};
std::optional<StrengthWindow> strength_window(const MoleculeEntry& entry, int target);

}  // namespace kgb
