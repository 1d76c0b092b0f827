#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kgbound/oracle.hpp"

using namespace kgb;

TEST_CASE("adaptive quadrature") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, constants::pi) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0, 1e-12) ==
        doctest::Approx(0.5 * std::sqrt(constants::pi)).epsilon(1e-12));
  const auto r = integrate_detailed([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(r.error >= 0.0);
}

TEST_CASE("finite-difference derivatives") {
  auto f = [](double x) { return std::exp(2 * x); };
  CHECK(derivative(f, 0.3, 1, 1e-2) == doctest::Approx(2 * std::exp(0.6)).epsilon(1e-11));
  CHECK(derivative(f, 0.3, 2, 1e-2) == doctest::Approx(4 * std::exp(0.6)).epsilon(1e-9));
  CHECK_THROWS_AS(derivative(f, 0.3, 3, 1e-2), DomainError);
  CHECK_THROWS_AS(derivative(f, 0.3, 1, 0.0), DomainError);
}

TEST_CASE("shooting configuration") {
  ShootingConfig bad;
  bad.steps = 10;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  const auto c = ShootingConfig::for_delta(0.05);
  CHECK(c.r_max == doctest::Approx(600.0));
  CHECK(ShootingConfig::for_delta(1.0).r_max == doctest::Approx(60.0));
}

TEST_CASE("numeric eigenvalues match the physical branch") {
  const auto ctx = PhysicalContext::natural();
  SolveOptions phys;
  phys.convention = LevelConvention::physical;
  for (const char* label : {"1s", "2s", "3d"}) {
    const auto qn = QuantumNumbers::from_label(label);
    const auto p = reference_params(0.1);
    const auto num = numeric_eigenvalue(p, ctx, qn, ShootingConfig::for_delta(0.1));
    CHECK(num.energy == doctest::Approx(solve_energy(p, ctx, qn, phys).energy).epsilon(1e-8));
    CHECK(num.nodes == qn.n_r);
    CHECK(std::fabs(shooting_mismatch(p, ctx, qn.l, num.energy, ShootingConfig::for_delta(0.1))) < 1e-6);
  }
}

TEST_CASE("node counting brackets levels") {
  const auto ctx = PhysicalContext::natural();
  const auto p = reference_params(0.15);
  const auto cfg = ShootingConfig::for_delta(0.15);
  const auto levels = numeric_spectrum(p, ctx, 0, cfg);
  REQUIRE(levels.size() >= 2);
  for (size_t i = 0; i < levels.size(); ++i) CHECK(levels[i].nodes == static_cast<int>(i));
  CHECK(sturm_count(p, ctx, 0, levels[1].energy + 1e-6, cfg) == 2);
  CHECK(sturm_count(p, ctx, 0, levels[1].energy - 1e-6, cfg) == 1);
}

TEST_CASE("verification report") {
  const std::vector<double> deltas = {0.1};
  const std::vector<QuantumNumbers> states = {QuantumNumbers::make(0, 0)};
  const auto rows = verify_states(reference_params(0.1), PhysicalContext::natural(), deltas, states, 20000);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].abs_diff < 5e-4);
  std::ostringstream os;
  write_verification_csv(os, rows);
  CHECK(os.str().rfind("n_r,l,delta,E_analytic,E_numeric,abs_diff,nodes\n", 0) == 0);
}
