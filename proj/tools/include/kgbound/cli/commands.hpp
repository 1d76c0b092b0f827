#pragma once

// Command implementations, independent of argument parsing so they can be
// driven from tests.

#include <optional>
#include <string>
#include <vector>

#include "kgbound/cli/table.hpp"
#include "kgbound/oracle.hpp"
#include "kgbound/potential.hpp"
#include "kgbound/special_cases.hpp"
#include "kgbound/spectrum.hpp"
#include "kgbound/thermo.hpp"

namespace kgb::cli {

enum ExitCode : int { exit_ok = 0, exit_numeric = 1, exit_usage = 2 };

/// Bad user input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  Table table;
  std::vector<std::string> errors;  ///< per-item diagnostics
  int exit_code = exit_ok;
};

struct Strengths {
  double v1 = 4.0;
  double v2 = 2.0;
  double v3 = 4.0;
  double v4 = 4.0;
};

/// Reference grids.
const std::vector<double>& table1_deltas();
const std::vector<std::string>& table1_labels();

/// Parses "n_r,l".
QuantumNumbers parse_nl_pair(const std::string& text);

struct EnergyOptions {
  Strengths v;
  double mass = 1.0;
  bool table1 = false;
  std::vector<std::string> labels;
  std::vector<std::string> nl_pairs;
  std::vector<double> deltas;
  LevelConvention convention = LevelConvention::tabulated;
  std::optional<SpecialCase> special;
};
Outcome cmd_energy(const EnergyOptions& o);

struct WaveOptions {
  Strengths v;
  double mass = 1.0;
  std::optional<std::string> label;
  int n_r = 0;
  int l = 0;
  int m = 0;
  double delta = 0.15;
  double r_max = 15.0;
  int r_points = 151;
  int theta_points = 61;
  double phi = 0.0;
  LevelConvention convention = LevelConvention::tabulated;
  bool nodes = false;
  bool check_norm = false;
};
Outcome cmd_wavefunction(const WaveOptions& o);

struct BetaGrid {
  double lo = 0.05;
  double hi = 3.0;
  int points = 60;
};

struct ThermoOptions {
  Strengths v;
  double mu = 1.0;
  std::vector<double> deltas;
  std::vector<int> ls;
  BetaGrid beta;
  PartitionModel model = PartitionModel::poisson;
};
Outcome cmd_thermo(const ThermoOptions& o);

struct MoleculeOptions {
  std::vector<std::string> names;
  std::optional<std::string> catalog_path;
  bool list = false;
  bool explore = false;
  bool spectrum = false;
  std::vector<int> ls;
  BetaGrid beta;
  MoleculeStrengths v;
  PartitionModel model = PartitionModel::poisson;
};
Outcome cmd_molecule(const MoleculeOptions& o);

struct VerifyOptions {
  Strengths v;
  double mass = 1.0;
  std::vector<std::string> labels;
  std::vector<double> deltas;
  double tol = 5e-4;
  int steps = 100000;
  OdeModel model = OdeModel::approximated;
};
Outcome cmd_verify(const VerifyOptions& o);

struct PotentialOptions {
  Strengths v;
  double delta = 0.15;
  double r_min = 0.1;
  double r_max = 20.0;
  int points = 200;
  GridSpacing spacing = GridSpacing::linear;
  bool minimum = false;
};
Outcome cmd_potential(const PotentialOptions& o);

/// One figure's data: file stem, table and the columns a plot would use.
struct FigureData {
  std::string stem;
  std::string title;
  Table table;
  std::string x;
  std::vector<std::string> ys;
};

/// Data behind figures 1-7, deterministic.
std::vector<FigureData> build_figures();

}  // namespace kgb::cli
