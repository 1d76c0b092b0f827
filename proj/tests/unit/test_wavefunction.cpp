#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kgbound/oracle.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgb;

namespace {

BoundState state(const char* label, double delta,
                 LevelConvention c = LevelConvention::tabulated) {
  SolveOptions o;
  o.convention = c;
  return solve_energy(reference_params(delta), PhysicalContext::natural(),
                      QuantumNumbers::from_label(label), o);
}

double norm(const BoundState& st) {
  return integrate_to_infinity(
      [&](double r) {
        const double c = radial_chi(st, r);
        return c * c;
      },
      0.0, 1e-12);
}

}  // namespace

TEST_CASE("normalization") {
  for (const char* label : {"1s", "2s", "3p", "4f"}) {
    CAPTURE(label);
    CHECK(norm(state(label, 0.15)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm(state(label, 0.15, LevelConvention::physical)) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("hypergeometric and Jacobi forms agree") {
  const auto st = state("4p", 0.1);
  for (double r : {0.05, 0.5, 2.0, 7.5, 20.0}) {
    CHECK(radial_chi(st, r) == doctest::Approx(radial_chi_jacobi(st, r)).epsilon(1e-11));
  }
}

TEST_CASE("radial nodes") {
  for (const char* label : {"1s", "2s", "3p", "4p", "4d"}) {
    const auto st = state(label, 0.1);
    const auto rep = count_radial_nodes(st);
    CHECK(rep.count == st.qn.n_r);
    for (double x : rep.positions) CHECK(std::fabs(radial_chi(st, x)) < 1e-6);
  }
}

TEST_CASE("three-dimensional samples") {
  const auto st = state("2p", 0.15);
  const double rs[] = {1.0, 2.0};
  const double ths[] = {0.0, 1.0};
  const auto g = sample_grid(st, 1, rs, ths, 0.3);
  REQUIRE(g.size() == 4);
  CHECK(g[0].density == doctest::Approx(0.0));  // Y_1^1 vanishes on the axis
  CHECK(g[1].density == doctest::Approx(std::norm(total_psi(st, 1, 1.0, 1.0, 0.3))));
  CHECK_THROWS_AS(total_psi(st, 2, 1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(sample_grid(st, 0, std::span<const double>{}, ths), DomainError);
  std::ostringstream os;
  write_wave_csv(os, g);
  CHECK(os.str().rfind("r,theta,re_psi,im_psi,density\n", 0) == 0);
}

TEST_CASE("log normalization constant") {
  const auto st = state("1s", 0.05);
  CHECK(std::exp(log_normalization_constant(0, st.aux.eps, st.aux.omega, 0.05)) ==
        doctest::Approx(normalization_constant(st)));
}
