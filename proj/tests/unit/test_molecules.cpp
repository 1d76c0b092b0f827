#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kgbound/thermo.hpp"

using namespace kgb;

TEST_CASE("default catalog") {
  const auto& cat = default_catalog();
  REQUIRE(cat.size() == 4);
  CHECK(cat[0] == MoleculeEntry{"LiH", 1.1280, 0.8801221});
  CHECK(cat[1] == MoleculeEntry{"HCl", 1.8677, 0.9801045});
  CHECK(cat[2] == MoleculeEntry{"CuLi", 1.00818, 6.259494});
  CHECK(cat[3] == MoleculeEntry{"NiC", 2.25297, 9.974265});
  CHECK(find_molecule(cat, "HCl").has_value());
  CHECK_FALSE(find_molecule(cat, "Xx").has_value());
}

TEST_CASE("catalog files") {
  std::istringstream in("# comment\nname,delta,mu\n\nH2,1.44,0.50391\n");
  const auto cat = load_catalog(in);
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].name == "H2");
  CHECK(cat[0].delta == 1.44);
  std::istringstream bad("name,delta,mu\nH2,abc,1\n");
  CHECK_THROWS_AS(load_catalog(bad), DomainError);
  std::istringstream nohead("H2,1.44,0.5\n");
  CHECK_THROWS_AS(load_catalog(nohead), DomainError);
  CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.csv"), DomainError);
}

TEST_CASE("molecular spectra") {
  const MoleculeStrengths v;
  const int expected[] = {24, 15, 74, 42};
  for (size_t i = 0; i < 4; ++i) {
    const auto s = molecule_spectrum(default_catalog()[i], v, 0);
    CHECK(s.n_max == expected[i]);
    CHECK(std::isfinite(partition_poisson(s, 1.0)));
  }
  const MoleculeStrengths reference{4, 2, 4, 4};
  CHECK_THROWS_AS(molecule_spectrum(default_catalog()[0], reference, 0), NoBoundStateError);
}

TEST_CASE("strength exploration") {
  const auto& hcl = default_catalog()[1];
  const auto w = strength_window(hcl, 15);
  REQUIRE(w.has_value());
  CHECK(w->v_lo < 44.0);
  CHECK(w->v_hi > 44.0);
  const MoleculeStrengths lo{w->v_lo * 1.001, w->v_lo * 0.5005, 0, 0};
  CHECK(molecule_spectrum(hcl, lo, 0).n_max == 15);
  const std::vector<double> vs = {10.0, 44.0};
  const auto probes = explore_strengths(default_catalog(), vs);
  CHECK(probes.size() == 8);
}
