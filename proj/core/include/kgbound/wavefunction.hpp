#pragma once

/// \file wavefunction.hpp
/// Normalized radial functions and total wave functions of solved states.
///
/// With s = e^{-2 delta r} the radial function is
///   chi(s) = C s^eps (1-s)^omega  Gamma(n_r+2eps+1)/(n_r! Gamma(2eps+1))
///            2F1(-n_r, n_r+2eps+2omega; 1+2eps; s)
///          = C s^eps (1-s)^omega P_{n_r}^{(2eps, 2omega-1)}(1-2s),
/// normalized so that int_0^inf chi(r)^2 dr = 1. The polynomial degree is
/// always the state's radial number n_r, whatever convention produced the
/// energy. Powers are taken in log space.
///
/// The total wave function is psi = chi(r)/r * Y_lm(theta, phi) with the
/// same s = e^{-2 delta r}; writing the exponentials as e^{-r/2b} = e^{-delta r}
/// instead would not be normalized.

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "kgbound/spectrum.hpp"

namespace kgb {

/// ln C for radial number n_r, eps > 0 and omega > 1/2:
///   C^2 = 2 n_r! delta (n_r+omega+eps) Gamma(n_r+2eps+2omega) Gamma(2eps+1)
///         / ((n_r+omega) Gamma(2eps) Gamma(n_r+2eps+1) Gamma(n_r+2omega)).
/// Throws DomainError when the normalization integral diverges.
double log_normalization_constant(int n_r, double eps, double omega, double delta);

/// C for a solved state.
double normalization_constant(const BoundState& state);

/// Radial amplitude chi(r) from the hypergeometric form.
double radial_chi(const BoundState& state, double r);

/// Radial amplitude chi(r) from the Jacobi-polynomial form.
double radial_chi_jacobi(const BoundState& state, double r);

/// chi(r)/r * Y_lm(theta, phi).
std::complex<double> total_psi(const BoundState& state, int m, double r, double theta, double phi);

struct RadialSample {
  double r;
  double s;            ///< e^{-2 delta r}
  double chi;          ///< radial amplitude
  double psi_density;  ///< |chi/r|^2 |Y_lm|^2 at the sampled angle
};

/// One grid point of the total wave function.
struct WaveSample {
  double r;
  double theta;
  std::complex<double> psi;
  double density;
};

/// Row-major (r outer, theta inner) samples of psi at azimuth phi.
/// Throws DomainError for empty grids or non-positive radii.
std::vector<WaveSample> sample_grid(const BoundState& state, int m, std::span<const double> r_grid,
                                    std::span<const double> theta_grid, double phi = 0.0);

/// Radial samples at fixed (theta, phi).
std::vector<RadialSample> sample_radial(const BoundState& state, int m,
                                        std::span<const double> r_grid, double theta,
                                        double phi = 0.0);

/// Writes `r,theta,re_psi,im_psi,density`.
void write_wave_csv(std::ostream& os, std::span<const WaveSample> samples);

struct NodeOptions {
  int grid_points = 4096;
  /// Grid spans [r_lo_factor/delta, r_hi_factor/delta] logarithmically.
  double r_lo_factor = 1e-6;
  double r_hi_factor = 50.0;
};

struct NodeReport {
  int count = 0;
  std::vector<double> positions;  ///< refined node radii
};

/// Interior zeros of chi(r) on r in (0, 50/delta). The sign of chi is taken
/// from the polynomial factor, so nodes are found even where chi underflows.
NodeReport count_radial_nodes(const BoundState& state, const NodeOptions& opts = {});

}  // namespace kgb
