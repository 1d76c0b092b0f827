#include "kgbound/specfun.hpp"

#include <cmath>
#include <string>

#include "kgbound/core.hpp"

namespace kgb::specfun {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

// sum_{k>=0} z^{2k+1} / (k! (2k+1)); every term has the sign of z so there is
// no cancellation. Only used for |z| < kAsymptoticThreshold.
double erfi_series_sum(double z) {
  const double z2 = z * z;
  double power = z;  // z^{2k+1} / k!
  CompensatedSum acc;
  acc.add(power);
  for (int k = 1; k < 1000; ++k) {
    power *= z2 / k;
    const double term = power / (2 * k + 1);
    acc.add(term);
    if (std::fabs(term) < 1e-18 * std::fabs(acc.sum)) break;
  }
  return acc.value();
}

constexpr double kAsymptoticThreshold = 6.0;

// F(z) ~ 1/(2z) sum_k (2k-1)!! / (2 z^2)^k, truncated at the smallest term.
double dawson_asymptotic(double z) {
  const double x = 1.0 / (2.0 * z * z);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum / (2.0 * z);
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma requires a positive argument, got " + std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

JacobiSpec JacobiSpec::make(int degree, double alpha_exp, double beta_exp) {
  if (degree < 0) throw DomainError("Jacobi degree must be non-negative");
  if (!(alpha_exp > -1.0) || !(beta_exp > -1.0)) {
    throw DomainError("Jacobi exponents must exceed -1");
  }
  return JacobiSpec{degree, alpha_exp, beta_exp};
}

double jacobi(const JacobiSpec& spec, double x) {
  const double a = spec.alpha_exp;
  const double b = spec.beta_exp;
  if (spec.degree == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  if (spec.degree == 1) return p;
  const double ab = a + b;
  const double a2_b2 = a * a - b * b;
  for (int n = 2; n <= spec.degree; ++n) {
    const double c = 2.0 * n + ab;
    const double lead = 2.0 * n * (n + ab) * (c - 2.0);
    const double next = ((c - 1.0) * (c * (c - 2.0) * x + a2_b2) * p -
                         2.0 * (n + a - 1.0) * (n + b - 1.0) * c * p_prev) /
                        lead;
    p_prev = p;
    p = next;
  }
  return p;
}

double hyp2f1_terminating(int n, double b, double c, double s) {
  if (n < 0) throw DomainError("hyp2f1_terminating needs n >= 0");
  if (c <= 0.0 && c == std::floor(c) && c >= -n) {
    throw DomainError("hyp2f1_terminating: c = " + std::to_string(c) + " is a pole of the series");
  }
  CompensatedSum acc;
  double term = 1.0;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<double>(k - n) * (b + k)) / ((c + k) * (k + 1)) * s;
    acc.add(term);
  }
  return acc.value();
}

double dawson(double z) {
  if (z == 0.0) return 0.0;
  const double az = std::fabs(z);
  if (az < kAsymptoticThreshold) return std::exp(-z * z) * erfi_series_sum(z);
  const double f = dawson_asymptotic(az);
  return z < 0.0 ? -f : f;
}

double erfi(double z) {
  if (std::fabs(z) < kAsymptoticThreshold) return kTwoOverSqrtPi * erfi_series_sum(z);
  return erfi_scaled(z, 0.0);
}

double erfi_scaled(double z, double c) {
  if (z == 0.0) return 0.0;
  return std::exp(z * z - c) * kTwoOverSqrtPi * dawson(z);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0) throw DomainError("spherical_harmonic needs l >= 0");
  if (m < -l || m > l) throw DomainError("spherical_harmonic needs |m| <= l");
  const int am = m < 0 ? -m : m;
  const double x = std::cos(theta);
  const double sx = std::sin(theta);

  // Fully normalised associated Legendre function, so that
  // Y_lm = pbar * exp(i m phi) integrates to one over the sphere.
  double pmm = 1.0 / std::sqrt(4.0 * constants::pi);
  for (int i = 1; i <= am; ++i) {
    pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * sx;
  }
  double plm = pmm;
  if (l > am) {
    double p_prev = pmm;
    plm = x * std::sqrt(2.0 * am + 3.0) * pmm;
    for (int ll = am + 2; ll <= l; ++ll) {
      const double l2 = static_cast<double>(ll) * ll;
      const double m2 = static_cast<double>(am) * am;
      const double lm1 = ll - 1.0;
      const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
      const double b = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
      const double next = a * (x * plm - b * p_prev);
      p_prev = plm;
      plm = next;
    }
  }
  std::complex<double> y = plm * std::polar(1.0, am * phi);
  if (m < 0) {
    y = std::conj(y);
    if (am % 2 == 1) y = -y;
  }
  return y;
}

}  // namespace kgb::specfun
