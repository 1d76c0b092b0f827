#include "doctest.h"
#include "kgbound/core.hpp"

using namespace kgb;

TEST_CASE("potential parameters") {
  const auto p = PotentialParams::make(4, 2, 4, 4, 0.15);
  CHECK(p.b() == doctest::Approx(1.0 / 0.3));
  CHECK(p.alpha().alpha1 == doctest::Approx(4 + 2 * 0.15 * 4));
  CHECK(p.alpha().alpha2 == 2.0);
  CHECK(p.alpha().alpha3 == doctest::Approx(-4 * 0.0225 * 4));
  CHECK(reference_params(0.15) == p);
  CHECK(p.with_delta(0.05).delta() == 0.05);
  CHECK_FALSE(p.has_negative_yukawa());
  CHECK(PotentialParams::make(4, 2, -1, 4, 0.1).has_negative_yukawa());
  CHECK_THROWS_AS(PotentialParams::make(4, 2, 4, 4, 0.0), DomainError);
  CHECK_THROWS_AS(PotentialParams::make(-1, 2, 4, 4, 0.1), DomainError);
}

TEST_CASE("quantum numbers and labels") {
  const auto qn = QuantumNumbers::from_label("4f");
  CHECK(qn.n_r == 0);
  CHECK(qn.l == 3);
  CHECK(qn.n() == 4);
  CHECK(QuantumNumbers::from_label("3p") == QuantumNumbers::make(1, 1));
  CHECK(QuantumNumbers::make(2, 2).label() == "5d");
  CHECK_THROWS_AS(QuantumNumbers::from_label("2d"), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::from_label("x"), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::make(0, 1, 2), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::make(-1, 0), DomainError);
}

TEST_CASE("physical context") {
  const auto nat = PhysicalContext::natural();
  CHECK(nat.mass == 1.0);
  CHECK(nat.hbar_c == 1.0);
  const auto mol = PhysicalContext::molecular(1.0);
  CHECK(mol.mode == UnitMode::molecular);
  CHECK(mol.mu == doctest::Approx(931.494028e6));
  CHECK_THROWS_AS(PhysicalContext::natural(-1.0), DomainError);
}
