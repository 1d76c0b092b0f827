#include "kgbound/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgbound/cli/commands.hpp"

#ifndef KGBOUND_VERSION_STRING
#define KGBOUND_VERSION_STRING "0.0.0"
#endif

namespace kgb::cli {

namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string format = "csv";
  std::string output;
  bool gnuplot = false;
};

void add_strengths(CLI::App* cmd, Strengths& v) {
  cmd->add_option("--v1", v.v1, "Eckart attractive strength V1")->capture_default_str();
  cmd->add_option("--v2", v.v2, "Eckart repulsive strength V2")->capture_default_str();
  cmd->add_option("--v3", v.v3, "Yukawa strength V3")->capture_default_str();
  cmd->add_option("--v4", v.v4, "inverse-quadratic Yukawa strength V4")->capture_default_str();
}

void add_beta_grid(CLI::App* cmd, BetaGrid& g) {
  cmd->add_option("--beta-min", g.lo, "smallest beta")->capture_default_str();
  cmd->add_option("--beta-max", g.hi, "largest beta")->capture_default_str();
  cmd->add_option("--beta-points", g.points, "number of beta values")->capture_default_str();
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path output_base() {
  const char* env = std::getenv("KGBOUND_OUTPUT_DIR");
  return env && *env ? fs::path(env) : fs::path();
}

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) p = output_base() / p;
  return p;
}

void write_meta(const fs::path& path, const std::string& command, int argc,
                const char* const* argv) {
  nlohmann::ordered_json meta;
  meta["version"] = KGBOUND_VERSION_STRING;
  meta["command"] = command;
  meta["args"] = nlohmann::ordered_json::array();
  for (int i = 1; i < argc; ++i) meta["args"].push_back(argv[i]);
  meta["timestamp_utc"] = utc_timestamp();
  std::ofstream os(path);
  os << meta.dump(2) << '\n';
}

std::ofstream open_for_write(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write " + path.string());
  return os;
}

void emit_notes(const Table& t, Format f, std::ostream& err) {
  if (f != Format::json) return;
  for (const auto& n : t.notes) err << "# " << n << '\n';
}

// Default plot columns per command: x plus the first value column.
std::pair<std::string, std::vector<std::string>> plot_columns(const Table& t) {
  auto has = [&](const std::string& c) {
    return std::find(t.columns.begin(), t.columns.end(), c) != t.columns.end();
  };
  if (has("beta")) return {"beta", {"Z", "U", "F", "S", "C"}};
  if (has("exact")) return {"r", {"exact", "approx"}};
  if (has("density")) return {"r", {"density"}};
  if (has("E_numeric")) return {"delta", {"abs_diff"}};
  if (has("E") && has("delta")) return {"delta", {"E"}};
  if (has("E")) return {"n", {"E"}};
  return {t.columns.front(), {t.columns.back()}};
}

int finish(const Outcome& o, const GlobalOptions& g, const std::string& command, int argc,
           const char* const* argv, std::ostream& out, std::ostream& err) {
  const Format f = parse_format(g.format);
  for (const auto& e : o.errors) err << "error: " << e << '\n';
  emit_notes(o.table, f, err);
  const auto [x, ys] = plot_columns(o.table);
  if (g.output.empty()) {
    write_table(out, o.table, f);
    if (g.gnuplot) err << gnuplot_script(o.table, "-", x, ys, command);
    return o.exit_code;
  }
  const fs::path path = resolve_output(g.output);
  {
    auto os = open_for_write(path);
    write_table(os, o.table, f);
  }
  write_meta(path.string() + ".meta.json", command, argc, argv);
  if (g.gnuplot) {
    auto gp = open_for_write(path.string() + ".gp");
    gp << gnuplot_script(o.table, path.filename().string(), x, ys, command);
  }
  return o.exit_code;
}

int write_figures(const std::string& dir_opt, const GlobalOptions& g, int argc,
                  const char* const* argv, std::ostream& out) {
  const Format f = parse_format(g.format);
  fs::path dir;
  if (!dir_opt.empty()) {
    dir = resolve_output(dir_opt);
  } else {
    dir = output_base().empty() ? fs::path("figures") : output_base();
  }
  fs::create_directories(dir);
  for (const auto& fig : build_figures()) {
    const fs::path data = dir / (fig.stem + extension(f));
    {
      auto os = open_for_write(data);
      write_table(os, fig.table, f);
    }
    out << data.string() << '\n';
    if (g.gnuplot) {
      const fs::path gp = dir / (fig.stem + ".gp");
      auto os = open_for_write(gp);
      os << gnuplot_script(fig.table, data.filename().string(), fig.x, fig.ys, fig.title);
      out << gp.string() << '\n';
    }
  }
  write_meta(dir / "figures.meta.json", "figures", argc, argv);
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein-Gordon bound states in the Eckart plus class-of-Yukawa potential", "kgbound"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(KGBOUND_VERSION_STRING));
  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "write data to this file (relative to $KGBOUND_OUTPUT_DIR)");
  app.add_flag("--gnuplot", g.gnuplot, "also emit a gnuplot script");

  EnergyOptions eo;
  std::string e_conv = "tabulated", e_special;
  bool coulomb_limit = false;
  auto* energy = app.add_subcommand("energy", "bound-state energies");
  add_strengths(energy, eo.v);
  energy->add_option("--mass", eo.mass, "particle mass M")->capture_default_str();
  energy->add_flag("--table1", eo.table1, "all 32 reference states (4 deltas x 8 labels)");
  energy->add_option("--state", eo.labels, "spectroscopic label(s), e.g. 1s,2p")->delimiter(',');
  energy->add_option("--nl", eo.nl_pairs, "state as n_r,l (repeatable)");
  energy->add_option("--delta", eo.deltas, "screening parameter(s)")->delimiter(',');
  energy->add_option("--convention", e_conv, "tabulated or physical")->capture_default_str();
  energy->add_option("--special", e_special, "solve a reduced special case");
  energy->add_flag("--coulomb-limit", coulomb_limit, "closed-form Coulomb limit (needs V1=V2=V4=0)");

  WaveOptions wo;
  std::string w_conv = "tabulated", w_state;
  auto* wave = app.add_subcommand("wavefunction", "wave function on an r x theta grid");
  add_strengths(wave, wo.v);
  wave->add_option("--mass", wo.mass)->capture_default_str();
  wave->add_option("--state", w_state, "spectroscopic label");
  wave->add_option("--n-r", wo.n_r, "radial quantum number")->capture_default_str();
  wave->add_option("--l", wo.l, "orbital quantum number")->capture_default_str();
  wave->add_option("--m", wo.m, "magnetic quantum number")->capture_default_str();
  wave->add_option("--delta", wo.delta)->capture_default_str();
  wave->add_option("--r-max", wo.r_max)->capture_default_str();
  wave->add_option("--r-points", wo.r_points)->capture_default_str();
  wave->add_option("--theta-points", wo.theta_points)->capture_default_str();
  wave->add_option("--phi", wo.phi)->capture_default_str();
  wave->add_option("--convention", w_conv)->capture_default_str();
  wave->add_flag("--nodes", wo.nodes, "report the radial node count");
  wave->add_flag("--check-norm", wo.check_norm, "integrate |chi|^2 and fail if not 1");

  ThermoOptions to;
  std::string t_model = "poisson";
  auto* thermo = app.add_subcommand("thermo", "non-relativistic thermodynamic functions");
  add_strengths(thermo, to.v);
  thermo->add_option("--mu", to.mu, "reduced mass")->capture_default_str();
  thermo->add_option("--delta", to.deltas, "screening parameter(s), default 0.15")->delimiter(',');
  thermo->add_option("--l", to.ls, "orbital number(s), default 0")->delimiter(',');
  add_beta_grid(thermo, to.beta);
  thermo->add_option("--model", t_model, "poisson or direct")->capture_default_str();

  MoleculeOptions mo;
  std::string m_model = "poisson", m_catalog;
  auto* molecule = app.add_subcommand("molecule", "diatomic molecules in eV / angstrom / amu");
  molecule->add_option("--name", mo.names, "molecule name(s), default all")->delimiter(',');
  molecule->add_option("--catalog", m_catalog, "CSV catalog name,delta,mu with header");
  molecule->add_flag("--list", mo.list, "print the catalog entries");
  molecule->add_flag("--explore", mo.explore, "strength exploration report");
  molecule->add_flag("--spectrum", mo.spectrum, "energy levels up to the cutoff");
  molecule->add_option("--l", mo.ls, "orbital number(s), default 0")->delimiter(',');
  add_beta_grid(molecule, mo.beta);
  molecule->add_option("--v1", mo.v.v1, "V1 in eV")->capture_default_str();
  molecule->add_option("--v2", mo.v.v2, "V2 in eV")->capture_default_str();
  molecule->add_option("--v3", mo.v.v3, "V3 in eV angstrom")->capture_default_str();
  molecule->add_option("--v4", mo.v.v4, "V4 in eV angstrom^2")->capture_default_str();
  molecule->add_option("--model", m_model, "poisson or direct")->capture_default_str();

  VerifyOptions vo;
  std::string v_model = "approximated";
  bool v_table1 = false;
  auto* verify = app.add_subcommand("verify", "compare analytic energies with numerical shooting");
  add_strengths(verify, vo.v);
  verify->add_option("--mass", vo.mass)->capture_default_str();
  verify->add_flag("--table1", v_table1, "the 32 reference states (default)");
  verify->add_option("--state", vo.labels, "spectroscopic label(s)")->delimiter(',');
  verify->add_option("--delta", vo.deltas, "screening parameter(s)")->delimiter(',');
  verify->add_option("--tol", vo.tol, "largest accepted |dE|")->capture_default_str();
  verify->add_option("--steps", vo.steps, "Numerov steps")->capture_default_str();
  verify->add_option("--model", v_model, "approximated or exact potential")->capture_default_str();

  PotentialOptions po;
  std::string p_spacing = "linear";
  auto* potential = app.add_subcommand("potential", "exact and approximated potential profile");
  add_strengths(potential, po.v);
  potential->add_option("--delta", po.delta)->capture_default_str();
  potential->add_option("--r-min", po.r_min)->capture_default_str();
  potential->add_option("--r-max", po.r_max)->capture_default_str();
  potential->add_option("--points", po.points)->capture_default_str();
  potential->add_option("--spacing", p_spacing)
      ->check(CLI::IsMember({"linear", "logarithmic"}))
      ->capture_default_str();
  potential->add_flag("--minimum", po.minimum, "report the Eckart minimum");

  std::string fig_dir;
  auto* figures = app.add_subcommand("figures", "write the data behind figures 1-7");
  figures->add_option("--dir", fig_dir, "output directory (default $KGBOUND_OUTPUT_DIR or ./figures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*energy) {
      eo.convention = as_usage([&] { return parse_convention(e_conv); });
      if (!e_special.empty()) eo.special = as_usage([&] { return parse_special_case(e_special); });
      if (coulomb_limit) eo.special = SpecialCase::coulomb;
      return finish(cmd_energy(eo), g, command, argc, argv, out, err);
    }
    if (*wave) {
      if (!w_state.empty()) wo.label = w_state;
      wo.convention = as_usage([&] { return parse_convention(w_conv); });
      return finish(cmd_wavefunction(wo), g, command, argc, argv, out, err);
    }
    if (*thermo) {
      to.model = as_usage([&] { return parse_partition_model(t_model); });
      return finish(cmd_thermo(to), g, command, argc, argv, out, err);
    }
    if (*molecule) {
      if (!m_catalog.empty()) mo.catalog_path = m_catalog;
      mo.model = as_usage([&] { return parse_partition_model(m_model); });
      return finish(cmd_molecule(mo), g, command, argc, argv, out, err);
    }
    if (*verify) {
      if (v_model == "approximated") {
        vo.model = OdeModel::approximated;
      } else if (v_model == "exact") {
        vo.model = OdeModel::exact;
      } else {
        throw UsageError("--model must be approximated or exact");
      }
      return finish(cmd_verify(vo), g, command, argc, argv, out, err);
    }
    if (*potential) {
      po.spacing = p_spacing == "linear" ? GridSpacing::linear : GridSpacing::logarithmic;
      return finish(cmd_potential(po), g, command, argc, argv, out, err);
    }
    if (*figures) return write_figures(fig_dir, g, argc, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_numeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_numeric;
  }
  return exit_usage;
}

}  // namespace kgb::cli
