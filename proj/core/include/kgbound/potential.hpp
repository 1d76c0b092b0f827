#pragma once

/// \file potential.hpp
/// The Eckart plus class-of-Yukawa potential, its exponential approximation
/// and the energy-dependent effective potential of the radial equation.

#include <iosfwd>
#include <span>
#include <vector>

#include "kgbound/core.hpp"

namespace kgb {

/// Exact potential
///   -V1 y/(1-y) + V2 y/(1-y)^2 - V3 e^{-delta r}/r - V4 e^{-2 delta r}/r^2,  y = e^{-r/b}.
double eval_exact(const PotentialParams& p, double r);

/// Exponential form obtained by replacing 1/r and 1/r^2 with
///   1/r^2 ~ 4 delta^2 s/(1-s)^2,  s = e^{-2 delta r}:
///   -alpha1 s/(1-s) + alpha2 s/(1-s)^2 + alpha3 s^2/(1-s)^2.
double eval_approx(const PotentialParams& p, double r);

/// The centrifugal replacement 4 delta^2 e^{-2 delta r} / (1 - e^{-2 delta r})^2.
double centrifugal_approx(double delta, double r);

/// Location, depth and curvature of the Eckart well (V1 > V2 required).
struct EckartMinimum {
  double r0;
  double v_min;
  double force_constant;  ///< second derivative of the Eckart term at r0
};

EckartMinimum eckart_minimum(const PotentialParams& p);

/// 2(E+M) * eval_approx(r) + l(l+1) * centrifugal_approx(r).
double effective_potential(const PotentialParams& p, const PhysicalContext& ctx, double energy,
                           int l, double r);

enum class GridSpacing { logarithmic, linear };

/// Radius grid with `points` values in [r_min, r_max]; both ends included.
std::vector<double> make_radius_grid(double r_min, double r_max, int points, GridSpacing spacing);

/// Exact vs approximated potential sampled on a radius grid.
struct PotentialProfile {
  std::vector<double> r_grid;
  std::vector<double> exact;
  std::vector<double> approx;
  std::vector<double> abs_error;
};

PotentialProfile make_profile(const PotentialParams& p, std::span<const double> r_grid);

/// Writes `r,exact,approx,abs_error`.
void write_profile_csv(std::ostream& os, const PotentialProfile& profile);

}  // namespace kgb
