#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kgbound/oracle.hpp"
#include "kgbound/thermo.hpp"

using namespace kgb;

namespace {

NonRelSpectrum spec(double delta, int l) {
  return make_nonrel_spectrum(reference_params(delta), PhysicalContext::natural(), l);
}

}  // namespace

TEST_CASE("cutoffs") {
  CHECK(spec(0.15, 0).n_max == 6);
  for (int l = 1; l <= 3; ++l) CHECK(spec(0.15, l).n_max == 5);
  CHECK(spec(0.05, 1).n_max == 13);
  CHECK(spec(0.10, 1).n_max == 7);
  CHECK(spec(0.20, 1).n_max == 5);
  CHECK(cutoff_from_lambda(4.5) == 5);
  CHECK(cutoff_from_lambda(4.49) == 4);
}

TEST_CASE("non-relativistic levels") {
  const auto s = spec(0.15, 1);
  for (int n = 0; n <= s.n_max; ++n) {
    CHECK(nonrel_energy(s, n) == doctest::Approx(nonrel_energy_continuous(s, n)));
    if (n > 0) CHECK(nonrel_energy(s, n) > nonrel_energy(s, n - 1));
  }
  CHECK_THROWS_AS(nonrel_energy(s, s.n_max + 1), DomainError);
  CHECK_THROWS_AS(NonRelSpectrum::from_values(-1.0, 1.0, 0.1), NoBoundStateError);
}

TEST_CASE("partition functions") {
  const auto s = spec(0.15, 1);
  CHECK(partition_direct(s, 1.0) == doctest::Approx(19.4768015053774).epsilon(1e-12));
  CHECK(partition_poisson(s, 1.0) == doctest::Approx(18.56380576420337).epsilon(1e-12));
  CHECK(partition_poisson(s, 0.1) == doctest::Approx(6.515294305934008).epsilon(1e-12));
  CHECK(partition_poisson(s, 3.0) == doctest::Approx(830.3798654521931).epsilon(1e-12));
  CHECK(partition_poisson(s, 1e-8) == doctest::Approx(6.00000004761).epsilon(1e-10));
  CHECK(partition_poisson_quadrature(s, 1.0) == doctest::Approx(partition_poisson(s, 1.0)).epsilon(1e-10));
  CHECK(partition_direct(s, 0.0) == doctest::Approx(s.n_max + 1.0));
  CHECK(log_partition(s, 2.0, PartitionModel::direct) == doctest::Approx(std::log(partition_direct(s, 2.0))));
  CHECK(max_poisson_deviation(spec(0.15, 1), beta_grid(0.1, 2.0, 20)) < 0.15);
}

TEST_CASE("derived functions") {
  const auto s = spec(0.15, 1);
  CHECK(mean_energy(s, 1.0) == doctest::Approx(-1.475151670006866).epsilon(1e-11));
  CHECK(mean_energy(s, 0.1) == doctest::Approx(-0.85496259872639).epsilon(1e-11));
  CHECK(mean_energy(s, 3.0) == doctest::Approx(-2.135182870041945).epsilon(1e-11));
  CHECK(specific_heat(s, 1.0) == doctest::Approx(0.6519827932).epsilon(1e-8));
  const auto pt = thermo_point(s, 1.0);
  CHECK(pt.f * 1.0 == doctest::Approx(pt.u - pt.s).epsilon(1e-12));
  for (auto model : {PartitionModel::poisson, PartitionModel::direct}) {
    const double num = -derivative([&](double b) { return log_partition(s, b, model); }, 1.3, 1, 1e-3);
    CHECK(mean_energy(s, 1.3, model) == doctest::Approx(num).epsilon(1e-8));
  }
  // direct model: C = beta^2 Var(E) equals beta^2 d2 lnZ
  const double c2 = derivative([&](double b) { return log_partition_direct(s, b); }, 0.8, 2, 1e-3);
  CHECK(specific_heat(s, 0.8, PartitionModel::direct) == doctest::Approx(0.64 * c2).epsilon(1e-7));
}

TEST_CASE("curves and output") {
  const auto s = spec(0.15, 0);
  const auto betas = beta_grid(0.1, 1.0, 10);
  CHECK(betas.size() == 10);
  CHECK(betas.back() == doctest::Approx(1.0));
  CHECK(beta_grid(0.5, 2.0, 1) == std::vector<double>{0.5});
  const auto c = thermo_curve(s, betas);
  std::ostringstream os;
  write_thermo_csv(os, c);
  CHECK(os.str().rfind("beta,Z,U,F,S,C\n", 0) == 0);
  CHECK(parse_partition_model("direct") == PartitionModel::direct);
  CHECK_THROWS_AS(parse_partition_model("x"), DomainError);
}
