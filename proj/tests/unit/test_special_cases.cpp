#include <cmath>

#include "doctest.h"
#include "kgbound/special_cases.hpp"

using namespace kgb;

namespace {

SolveOptions physical() {
  SolveOptions o;
  o.convention = LevelConvention::physical;
  return o;
}

}  // namespace

TEST_CASE("case names") {
  CHECK(all_special_cases().size() == 9);
  for (auto c : all_special_cases()) CHECK(parse_special_case(to_string(c)) == c);
  CHECK(parse_special_case("central-yukawa") == SpecialCase::central_yukawa);
  CHECK_THROWS_AS(parse_special_case("morse"), DomainError);
}

TEST_CASE("restrictions") {
  const auto full = reference_params(0.1);
  const auto s = QuantumNumbers::make(0, 0);
  CHECK_THROWS_AS(check_restriction(SpecialCase::hulthen, full, s), DomainError);
  CHECK_NOTHROW(check_restriction(SpecialCase::hulthen, restrict_params(SpecialCase::hulthen, full), s));
  CHECK_THROWS_AS(check_restriction(SpecialCase::s_wave, full, QuantumNumbers::make(0, 1)), DomainError);
  const auto cy = restrict_params(SpecialCase::class_yukawa, full);
  CHECK(cy.v1() == 0.0);
  CHECK(cy.v2() == 0.0);
  CHECK(cy.v3() == 4.0);
}

TEST_CASE("reduced cases match the full solver") {
  const auto ctx = PhysicalContext::natural();
  struct Row {
    SpecialCase c;
    double v1, v2, v3, v4;
  };
  const Row rows[] = {{SpecialCase::eckart, 4, 2, 0, 0},
                      {SpecialCase::hulthen, 4, 0, 0, 0},
                      {SpecialCase::hulthen_yukawa, 4, 0, 4, 0},
                      {SpecialCase::class_yukawa, 0, 0, 4, 0.1},
                      {SpecialCase::central_yukawa, 0, 0, 4, 0},
                      {SpecialCase::inverse_quadratic_yukawa, 0, 0, 0, 0.5},
                      {SpecialCase::s_wave, 4, 2, 4, 4}};
  for (const auto& r : rows) {
    const auto p = PotentialParams::make(r.v1, r.v2, r.v3, r.v4, 0.15);
    const auto qn = QuantumNumbers::make(0, 0);
    CAPTURE(to_string(r.c));
    CHECK(std::fabs(special_case_energy(r.c, p, ctx, qn) - solve_energy(p, ctx, qn).energy) < 1e-10);
  }
}

TEST_CASE("case residual vanishes at its energy") {
  const auto ctx = PhysicalContext::natural();
  const auto p = PotentialParams::make(4, 0, 0, 0, 0.1);
  const auto qn = QuantumNumbers::make(1, 1);
  const double e = special_case_energy(SpecialCase::hulthen, p, ctx, qn, physical());
  CHECK(std::fabs(special_case_residual(SpecialCase::hulthen, p, ctx, qn.n_r, qn.l, e)) < 1e-10);
  CHECK(special_case_bracket(SpecialCase::hulthen, p, ctx, qn.n_r, qn.l, e) >= 0.0);
}

TEST_CASE("Coulomb closed form") {
  const auto ctx = PhysicalContext::natural();
  CHECK(coulomb_energy(4.0, ctx, QuantumNumbers::make(0, 0)) == doctest::Approx(-15.0 / 17.0).epsilon(1e-15));
  // V3 equal to the principal number forces E = 0
  CHECK(coulomb_energy(3.0, ctx, QuantumNumbers::make(1, 1)) == 0.0);
  const auto p = PotentialParams::make(0, 0, 1.5, 0, 0.1);
  CHECK(special_case_energy(SpecialCase::coulomb, p, ctx, QuantumNumbers::make(0, 0)) ==
        doctest::Approx(coulomb_energy(1.5, ctx, QuantumNumbers::make(0, 0))));
}

TEST_CASE("small-delta limits") {
  const auto ctx = PhysicalContext::natural();
  const auto qn = QuantumNumbers::make(0, 0);
  const double coul = coulomb_energy(1.5, ctx, qn);
  const double e3 = special_case_energy(SpecialCase::central_yukawa, PotentialParams::make(0, 0, 1.5, 0, 1e-3), ctx, qn, physical());
  const double e4 = special_case_energy(SpecialCase::central_yukawa, PotentialParams::make(0, 0, 1.5, 0, 1e-4), ctx, qn, physical());
  CHECK(std::fabs(e4 - coul) < std::fabs(e3 - coul));
  CHECK(std::fabs(e4 - coul) < 1e-4);

  const auto kp = KratzerParams::from_strengths(2.0, -2.0);
  CHECK(kp.r_e == doctest::Approx(2.0));
  CHECK(kp.d_e == doctest::Approx(0.5));
  const double ek = kratzer_fues_energy(kp, ctx, qn);
  CHECK(std::fabs(kratzer_fues_residual(kp, ctx, 0, 0, ek)) < 1e-10);
  const double c3 = special_case_energy(SpecialCase::class_yukawa, PotentialParams::make(0, 0, 2, -2, 1e-3), ctx, qn, physical());
  const double c4 = special_case_energy(SpecialCase::class_yukawa, PotentialParams::make(0, 0, 2, -2, 1e-4), ctx, qn, physical());
  CHECK(std::fabs(c4 - ek) < std::fabs(c3 - ek));
  CHECK(std::fabs(c4 - ek) < 1e-3);
  CHECK_THROWS_AS(KratzerParams::make(-1.0, 1.0), DomainError);
}
