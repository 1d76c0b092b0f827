#include <cmath>

#include "doctest.h"
#include "kgbound/core.hpp"
#include "kgbound/specfun.hpp"

using namespace kgb;
using namespace kgb::specfun;

TEST_CASE("ln_gamma") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(constants::pi)).epsilon(1e-14));
  CHECK(ln_gamma(171.5) == doctest::Approx(std::lgamma(171.5)).epsilon(1e-14));
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
}

TEST_CASE("jacobi polynomials") {
  CHECK(jacobi(JacobiSpec::make(0, 1.3, 2.7), 0.4) == 1.0);
  // P_1^(a,b)(x) = (a+1) + (a+b+2)(x-1)/2
  CHECK(jacobi(JacobiSpec::make(1, 1.3, 2.7), 0.4) == doctest::Approx(2.3 + 6.0 * (-0.6) / 2));
  CHECK(jacobi(JacobiSpec::make(5, 1.3, 2.7), 0.4) == doctest::Approx(0.76004775).epsilon(1e-8));
  // Legendre special case
  CHECK(jacobi(JacobiSpec::make(2, 0.0, 0.0), 0.3) == doctest::Approx(0.5 * (3 * 0.09 - 1)));
  CHECK_THROWS_AS(JacobiSpec::make(-1, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiSpec::make(2, -1.0, 0.0), DomainError);
}

TEST_CASE("terminating hypergeometric series") {
  CHECK(hyp2f1_terminating(0, 2.0, 3.0, 0.7) == 1.0);
  CHECK(hyp2f1_terminating(3, 5.5, 2.5, 0.3) ==
        doctest::Approx(-0.060714285714285714286).epsilon(1e-14));
  // 2F1(-n, b; b; s) = (1-s)^n
  CHECK(hyp2f1_terminating(4, 1.7, 1.7, 0.25) == doctest::Approx(std::pow(0.75, 4)).epsilon(1e-14));
  CHECK_THROWS_AS(hyp2f1_terminating(3, 1.0, -1.0, 0.5), DomainError);
}

TEST_CASE("dawson and erfi") {
  CHECK(dawson(0.0) == 0.0);
  CHECK(dawson(30.0) == doctest::Approx(0.016675941401059175798).epsilon(1e-14));
  CHECK(dawson(-1.0) == doctest::Approx(-0.53807950691276841914).epsilon(1e-14));
  CHECK(erfi(1.0) == doctest::Approx(1.650425758797542876).epsilon(1e-14));
  CHECK(erfi(0.3) == doctest::Approx(0.34894933875893618041).epsilon(1e-14));
  CHECK(erfi(5.0) == doctest::Approx(8298273880.6768035161).epsilon(1e-13));
  CHECK(erfi(-0.3) == doctest::Approx(-erfi(0.3)));
  // scaled form stays finite where erfi itself overflows
  const double s = erfi_scaled(30.0, 900.0);
  CHECK(std::isfinite(s));
  CHECK(s == doctest::Approx(2.0 / std::sqrt(constants::pi) * dawson(30.0)).epsilon(1e-13));
  CHECK(erfi_scaled(1.0, 0.5) == doctest::Approx(std::exp(-0.5) * erfi(1.0)).epsilon(1e-14));
}

TEST_CASE("spherical harmonics") {
  const double y00 = 0.5 / std::sqrt(constants::pi);
  CHECK(std::abs(spherical_harmonic(0, 0, 1.1, 0.4) - std::complex<double>(y00, 0.0)) < 1e-15);
  // Y_1^0 = sqrt(3/4pi) cos(theta)
  CHECK(spherical_harmonic(1, 0, 0.7, 0.0).real() ==
        doctest::Approx(std::sqrt(3.0 / (4 * constants::pi)) * std::cos(0.7)));
  // Condon-Shortley: Y_1^1 = -sqrt(3/8pi) sin(theta) e^{i phi}
  const auto y11 = spherical_harmonic(1, 1, 0.7, 0.3);
  CHECK(y11.real() == doctest::Approx(-std::sqrt(3.0 / (8 * constants::pi)) * std::sin(0.7) * std::cos(0.3)));
  CHECK(y11.imag() == doctest::Approx(-std::sqrt(3.0 / (8 * constants::pi)) * std::sin(0.7) * std::sin(0.3)));
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.1, 0.0), DomainError);
}
