#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "kgbound/cli/app.hpp"
#include "kgbound/cli/commands.hpp"

using namespace kgb;
using namespace kgb::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kgbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  }
  return lines;
}

}  // namespace

TEST_CASE("energy") {
  const auto t1 = run({"energy", "--table1"});
  CHECK(t1.code == 0);
  CHECK(data_lines(t1.out).size() == 33);
  const auto one = run({"energy", "--delta", "0.05", "--state", "1s"});
  CHECK(one.code == 0);
  const auto rows = data_lines(one.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "delta,n_r,l,label,E");
  CHECK(std::stod(rows[1].substr(rows[1].rfind(',') + 1)) == doctest::Approx(-0.99649604).epsilon(1e-8));
  const auto coul = run({"energy", "--state", "1s", "--v1", "0", "--v2", "0", "--v4", "0", "--coulomb-limit"});
  CHECK(coul.code == 0);
  CHECK(coul.out.find("-0.88235294117647") != std::string::npos);
  CHECK(run({"energy", "--state", "1s", "--coulomb-limit"}).code == 2);
  CHECK(run({"energy", "--state", "9z"}).code == 2);
  CHECK(run({"energy", "--nl", "1,0", "--nl", "0,1"}).code == 0);
  CHECK(run({"energy", "--v1", "0.01", "--v2", "0", "--v3", "0", "--v4", "0", "--delta", "0.3", "--nl", "3,0"}).code == 1);
}

TEST_CASE("wavefunction") {
  const auto w = run({"wavefunction", "--r-points", "10", "--theta-points", "3", "--nodes", "--check-norm"});
  CHECK(w.code == 0);
  CHECK(w.out.find("# nodes=0") != std::string::npos);
  CHECK(data_lines(w.out).size() == 31);
  CHECK(w.out.find("nan") == std::string::npos);
  CHECK(run({"wavefunction", "--state", "3p", "--nodes", "--r-points", "2", "--theta-points", "1"}).out.find("# nodes=1") != std::string::npos);
  CHECK(run({"wavefunction", "--r-points", "0"}).code == 2);
  CHECK(run({"wavefunction", "--l", "1", "--m", "2"}).code == 2);
}

TEST_CASE("thermo") {
  const auto t = run({"thermo"});
  CHECK(t.code == 0);
  CHECK(t.out.find("N=6") != std::string::npos);
  CHECK(run({"thermo", "--delta", "0.05", "--l", "1"}).out.find("N=13") != std::string::npos);
  const auto single = run({"thermo", "--beta-points", "1", "--beta-min", "1", "--beta-max", "1"});
  CHECK(data_lines(single.out).size() == 2);
  const auto multi = run({"thermo", "--l", "0,1"});
  CHECK(data_lines(multi.out)[0] == "delta,l,beta,Z,U,F,S,C");
  CHECK(run({"thermo", "--v1", "0", "--v2", "0", "--v3", "0", "--v4", "0"}).code == 1);
  CHECK(run({"thermo", "--beta-points", "0"}).code == 2);
}

TEST_CASE("molecule") {
  const auto l = run({"molecule", "--name", "LiH", "--list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("LiH,1.128,0.8801221") != std::string::npos);
  const auto bad = run({"molecule", "--name", "Xx"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("HCl") != std::string::npos);
  const auto curves = run({"molecule", "--name", "HCl", "--beta-points", "5"});
  CHECK(curves.code == 0);
  CHECK(data_lines(curves.out).size() == 6);
  CHECK(run({"molecule", "--explore"}).code == 0);
  CHECK(run({"molecule", "--spectrum", "--name", "HCl"}).out.find("N=15") != std::string::npos);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--state", "1s,2p", "--delta", "0.1", "--steps", "20000"});
  CHECK(v.code == 0);
  CHECK(data_lines(v.out).size() == 3);
  CHECK(run({"verify", "--state", "1s", "--delta", "0.1", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("potential and formats") {
  const auto p = run({"potential", "--points", "3", "--minimum"});
  CHECK(p.code == 0);
  CHECK(p.out.find("eckart_r0=") != std::string::npos);
  const auto j = run({"--format", "json", "energy", "--state", "1s"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"label\": \"1s\"") != std::string::npos);
  CHECK(j.err.find("# convention=tabulated") != std::string::npos);
  CHECK(run({"energy", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
}

TEST_CASE("output files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "kgbound_cli_test";
  fs::remove_all(dir);
  const auto r = run({"energy", "--state", "1s", "--gnuplot", "-o", (dir / "e.csv").string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(dir / "e.csv"));
  CHECK(fs::exists(dir / "e.csv.meta.json"));
  CHECK(fs::exists(dir / "e.csv.gp"));
  fs::remove_all(dir);
}

TEST_CASE("figures are deterministic") {
  const auto a = build_figures();
  const auto b = build_figures();
  REQUIRE(a.size() == 7);
  for (size_t i = 0; i < a.size(); ++i) {
    std::ostringstream x, y;
    write_table(x, a[i].table, Format::csv);
    write_table(y, b[i].table, Format::csv);
    CHECK(x.str() == y.str());
    CHECK_FALSE(a[i].table.rows.empty());
  }
}

TEST_CASE("argument helpers") {
  CHECK(parse_nl_pair("2,1") == QuantumNumbers::make(2, 1));
  CHECK_THROWS_AS(parse_nl_pair("2"), UsageError);
  CHECK_THROWS_AS(parse_nl_pair("a,1"), UsageError);
  CHECK(table1_deltas().size() == 4);
  CHECK(table1_labels().size() == 8);
}
