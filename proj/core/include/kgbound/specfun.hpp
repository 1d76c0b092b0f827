#pragma once

/// \file specfun.hpp
/// Special functions used by the spectrum, wave-function and thermodynamics code.

#include <complex>

namespace kgb::specfun {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Degree and exponents of a Jacobi polynomial P_n^(alpha,beta).
struct JacobiSpec {
  int degree = 0;
  double alpha_exp = 0.0;
  double beta_exp = 0.0;

  /// Throws DomainError unless degree >= 0 and both exponents exceed -1.
  static JacobiSpec make(int degree, double alpha_exp, double beta_exp);
};

/// P_n^(alpha,beta)(x) by the three-term recurrence.
double jacobi(const JacobiSpec& spec, double x);

/// Terminating series 2F1(-n, b; c; s) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) s^k,
/// summed with Neumaier compensation. Throws DomainError when c is a
/// non-positive integer >= -n (a pole of the series).
double hyp2f1_terminating(int n, double b, double c, double s);

/// Dawson's integral F(z) = exp(-z^2) int_0^z exp(u^2) du.
double dawson(double z);

/// Imaginary error function erfi(z) = (2/sqrt(pi)) int_0^z exp(u^2) du.
double erfi(double z);

/// exp(-c) * erfi(z), formed as exp(z^2 - c) * (2/sqrt(pi)) * F(z) so that
/// huge erfi values multiplied by tiny prefactors never overflow.
double erfi_scaled(double z, double c);

/// Orthonormal spherical harmonic Y_lm(theta, phi) with the Condon-Shortley phase.
/// Throws DomainError when l < 0 or |m| > l.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace kgb::specfun
