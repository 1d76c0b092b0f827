#include "kgbound/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgbound/csv.hpp"
#include "kgbound/wavefunction.hpp"

namespace kgb::cli {

namespace {

PotentialParams make_potential(const Strengths& v, double delta) {
  try {
    return PotentialParams::make(v.v1, v.v2, v.v3, v.v4, delta);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

PhysicalContext natural_context(double mass) {
  if (!(mass > 0.0)) throw UsageError("--mass must be positive");
  return PhysicalContext::natural(mass, mass);
}

std::string fmt(double v) { return format_double(v); }

QuantumNumbers parse_label(const std::string& label) {
  try {
    return QuantumNumbers::from_label(label);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<QuantumNumbers> collect_states(const std::vector<std::string>& labels,
                                           const std::vector<std::string>& pairs) {
  std::vector<QuantumNumbers> out;
  for (const auto& s : labels) out.push_back(parse_label(s));
  for (const auto& s : pairs) out.push_back(parse_nl_pair(s));
  return out;
}

void require_grid(const BetaGrid& g) {
  if (g.points < 1) throw UsageError("beta grid is empty");
  if (!(g.lo > 0.0) || !(g.hi >= g.lo)) throw UsageError("beta grid needs 0 < beta-min <= beta-max");
}

void append_thermo_rows(Table& t, const std::vector<CsvWriter::Cell>& prefix,
                        const std::vector<ThermoPoint>& curve) {
  for (const auto& p : curve) {
    std::vector<CsvWriter::Cell> row = prefix;
    row.insert(row.end(), {p.beta_inv_temp, p.z, p.u, p.f, p.s, p.c});
    t.add(std::move(row));
  }
}

std::string spectrum_note(const std::string& head, const NonRelSpectrum& s) {
  std::ostringstream n;
  n << head << " N=" << s.n_max << " lambda=" << fmt(s.lambda_max) << " kappa=" << fmt(s.kappa)
    << " nu=" << fmt(s.nu) << " A=" << fmt(s.a_scale);
  return n.str();
}

// Reported cutoffs for the catalog molecules, compared against in --explore.
std::optional<int> reported_cutoff(const std::string& name) {
  if (name == "HCl") return 15;
  if (name == "LiH") return 25;
  if (name == "CuLi") return 76;
  if (name == "NiC") return 42;
  return std::nullopt;
}

}  // namespace

const std::vector<double>& table1_deltas() {
  static const std::vector<double> d = {0.05, 0.10, 0.15, 0.20};
  return d;
}

const std::vector<std::string>& table1_labels() {
  static const std::vector<std::string> l = {"1s", "2s", "2p", "3p", "3d", "4p", "4d", "4f"};
  return l;
}

QuantumNumbers parse_nl_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected n_r,l but got '" + text + "'");
  try {
    size_t used = 0;
    const int n_r = std::stoi(text.substr(0, comma), &used);
    const std::string rest = text.substr(comma + 1);
    size_t used_l = 0;
    const int l = std::stoi(rest, &used_l);
    if (used_l != rest.size() || used != comma) throw UsageError("trailing characters in '" + text + "'");
    return QuantumNumbers::make(n_r, l);
  } catch (const std::logic_error&) {
    throw UsageError("expected n_r,l but got '" + text + "'");
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------

Outcome cmd_energy(const EnergyOptions& o) {
  const PhysicalContext ctx = natural_context(o.mass);
  std::vector<double> deltas = o.deltas;
  std::vector<QuantumNumbers> states = collect_states(o.labels, o.nl_pairs);
  if (o.table1) {
    if (deltas.empty()) deltas = table1_deltas();
    if (states.empty()) {
      for (const auto& l : table1_labels()) states.push_back(parse_label(l));
    }
  }
  if (deltas.empty()) deltas = {0.15};
  if (states.empty()) states.push_back(parse_label("1s"));

  Outcome out;
  out.table.columns = {"delta", "n_r", "l", "label", "E"};
  out.table.notes.push_back("convention=" + to_string(o.convention));
  if (o.special) out.table.notes.push_back("case=" + to_string(*o.special));
  SolveOptions opts;
  opts.convention = o.convention;
  for (double d : deltas) {
    const PotentialParams p = make_potential(o.v, d);
    for (const auto& qn : states) {
      if (o.special) {
        try {
          check_restriction(*o.special, p, qn);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }
      try {
        const double e = o.special ? special_case_energy(*o.special, p, ctx, qn, opts)
                                   : solve_energy(p, ctx, qn, opts).energy;
        out.table.add({d, qn.n_r, qn.l, qn.label(), e});
      } catch (const Error& e) {
        out.errors.push_back("delta=" + fmt(d) + " " + qn.label() + ": " + e.what());
        out.exit_code = exit_numeric;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome cmd_wavefunction(const WaveOptions& o) {
  if (o.r_points < 1 || o.theta_points < 1) throw UsageError("empty grid: r-points and theta-points must be >= 1");
  if (!(o.r_max > 0.0)) throw UsageError("--r-max must be positive");
  const PhysicalContext ctx = natural_context(o.mass);
  QuantumNumbers qn;
  try {
    qn = o.label ? QuantumNumbers::from_label(*o.label) : QuantumNumbers::make(o.n_r, o.l);
    qn = QuantumNumbers::make(qn.n_r, qn.l, o.m);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const PotentialParams p = make_potential(o.v, o.delta);
  SolveOptions opts;
  opts.convention = o.convention;

  Outcome out;
  out.table.columns = {"r", "theta", "re_psi", "im_psi", "density"};
  const BoundState state = solve_energy(p, ctx, qn, opts);
  out.table.notes.push_back("state=" + qn.label() + " n_r=" + std::to_string(qn.n_r) +
                            " l=" + std::to_string(qn.l) + " m=" + std::to_string(qn.m) +
                            " delta=" + fmt(o.delta) + " convention=" + to_string(o.convention) +
                            " E=" + fmt(state.energy));
  std::vector<double> rs(static_cast<size_t>(o.r_points));
  for (int i = 0; i < o.r_points; ++i) rs[static_cast<size_t>(i)] = o.r_max * (i + 1.0) / o.r_points;
  std::vector<double> thetas(static_cast<size_t>(o.theta_points));
  for (int i = 0; i < o.theta_points; ++i) {
    thetas[static_cast<size_t>(i)] =
        o.theta_points == 1 ? 0.0 : constants::pi * i / (o.theta_points - 1.0);
  }
  for (const auto& w : sample_grid(state, qn.m, rs, thetas, o.phi)) {
    out.table.add({w.r, w.theta, w.psi.real(), w.psi.imag(), w.density});
  }
  if (o.nodes) {
    out.table.notes.push_back("nodes=" + std::to_string(count_radial_nodes(state).count));
  }
  if (o.check_norm) {
    const double norm = integrate_to_infinity(
        [&](double r) {
          const double c = radial_chi(state, r);
          return c * c;
        },
        0.0, 1e-12);
    out.table.notes.push_back("norm=" + fmt(norm));
    if (std::fabs(norm - 1.0) > 1e-6) {
      out.errors.push_back("normalization integral " + fmt(norm) + " differs from 1");
      out.exit_code = exit_numeric;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome cmd_thermo(const ThermoOptions& o) {
  require_grid(o.beta);
  if (!(o.mu > 0.0)) throw UsageError("--mu must be positive");
  const std::vector<double> deltas = o.deltas.empty() ? std::vector<double>{0.15} : o.deltas;
  const std::vector<int> ls = o.ls.empty() ? std::vector<int>{0} : o.ls;
  for (int l : ls) {
    if (l < 0) throw UsageError("l must be non-negative");
  }
  const bool several = deltas.size() * ls.size() > 1;
  const auto betas = beta_grid(o.beta.lo, o.beta.hi, o.beta.points);
  const PhysicalContext ctx = PhysicalContext::natural(1.0, o.mu);

  Outcome out;
  out.table.columns = {"beta", "Z", "U", "F", "S", "C"};
  if (several) out.table.columns.insert(out.table.columns.begin(), {"delta", "l"});
  out.table.notes.push_back("model=" + to_string(o.model));
  for (double d : deltas) {
    const PotentialParams p = make_potential(o.v, d);
    for (int l : ls) {
      try {
        const NonRelSpectrum s = make_nonrel_spectrum(p, ctx, l);
        out.table.notes.push_back(
            spectrum_note("delta=" + fmt(d) + " l=" + std::to_string(l), s));
        const auto curve = thermo_curve(s, betas, o.model);
        append_thermo_rows(out.table,
                           several ? std::vector<CsvWriter::Cell>{d, l} : std::vector<CsvWriter::Cell>{},
                           curve);
      } catch (const Error& e) {
        out.errors.push_back("delta=" + fmt(d) + " l=" + std::to_string(l) + ": " + e.what());
        out.exit_code = exit_numeric;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome cmd_molecule(const MoleculeOptions& o) {
  std::vector<MoleculeEntry> catalog;
  if (o.catalog_path) {
    try {
      catalog = load_catalog_file(*o.catalog_path);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    catalog = default_catalog();
  }
  std::vector<MoleculeEntry> chosen;
  if (o.names.empty()) {
    chosen = catalog;
  } else {
    for (const auto& n : o.names) {
      const auto hit = find_molecule(catalog, n);
      if (!hit) {
        std::string list;
        for (const auto& e : catalog) list += (list.empty() ? "" : ", ") + e.name;
        throw UsageError("unknown molecule '" + n + "'; catalog: " + list);
      }
      chosen.push_back(*hit);
    }
  }

  Outcome out;
  if (o.list) {
    out.table.columns = {"name", "delta", "mu"};
    for (const auto& e : chosen) out.table.add({e.name, e.delta, e.mu});
    return out;
  }
  std::ostringstream strengths;
  strengths << "units=eV,angstrom,amu V1=" << fmt(o.v.v1) << " V2=" << fmt(o.v.v2)
            << " V3=" << fmt(o.v.v3) << " V4=" << fmt(o.v.v4);
  if (o.explore) {
    out.table.columns = {"molecule", "N", "lambda", "reported_N", "V_lo", "V_hi"};
    out.table.notes.push_back(strengths.str());
    out.table.notes.push_back(
        "V_lo,V_hi: window of V for which V1=V, V2=V/2, V3=V4=0 gives the reported N at l=0");
    for (const auto& e : chosen) {
      double lambda = std::nan("");
      int n = -1;
      try {
        const auto s = molecule_spectrum(e, o.v, 0);
        lambda = s.lambda_max;
        n = s.n_max;
      } catch (const Error& err) {
        out.table.notes.push_back(e.name + ": " + err.what());
      }
      const auto target = reported_cutoff(e.name);
      double lo = std::nan(""), hi = std::nan("");
      if (target) {
        if (const auto w = strength_window(e, *target)) {
          lo = w->v_lo;
          hi = w->v_hi;
        }
      }
      out.table.add({e.name, n, lambda, target ? *target : -1, lo, hi});
    }
    return out;
  }
  const std::vector<int> ls = o.ls.empty() ? std::vector<int>{0} : o.ls;
  for (int l : ls) {
    if (l < 0) throw UsageError("l must be non-negative");
  }
  out.table.notes.push_back(strengths.str());
  if (o.spectrum) {
    out.table.columns = {"molecule", "l", "n", "E"};
    for (const auto& e : chosen) {
      for (int l : ls) {
        try {
          const auto s = molecule_spectrum(e, o.v, l);
          out.table.notes.push_back(spectrum_note(e.name + " l=" + std::to_string(l), s));
          for (int n = 0; n <= s.n_max; ++n) out.table.add({e.name, l, n, nonrel_energy(s, n)});
        } catch (const Error& err) {
          out.errors.push_back(e.name + " l=" + std::to_string(l) + ": " + err.what());
          out.exit_code = exit_numeric;
        }
      }
    }
    return out;
  }
  require_grid(o.beta);
  const auto betas = beta_grid(o.beta.lo, o.beta.hi, o.beta.points);
  out.table.columns = {"molecule", "l", "beta", "Z", "U", "F", "S", "C"};
  out.table.notes.push_back("model=" + to_string(o.model) + " beta in 1/eV");
  for (const auto& e : chosen) {
    for (int l : ls) {
      try {
        const auto s = molecule_spectrum(e, o.v, l);
        out.table.notes.push_back(spectrum_note(e.name + " l=" + std::to_string(l), s));
        append_thermo_rows(out.table, {e.name, l}, thermo_curve(s, betas, o.model));
      } catch (const Error& err) {
        out.errors.push_back(e.name + " l=" + std::to_string(l) + ": " + err.what());
        out.exit_code = exit_numeric;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome cmd_verify(const VerifyOptions& o) {
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (o.steps < 1000) throw UsageError("--steps must be at least 1000");
  const PhysicalContext ctx = natural_context(o.mass);
  const std::vector<double> deltas = o.deltas.empty() ? table1_deltas() : o.deltas;
  std::vector<QuantumNumbers> states;
  for (const auto& l : o.labels.empty() ? table1_labels() : o.labels) states.push_back(parse_label(l));

  Outcome out;
  out.table.columns = {"n_r", "l", "delta", "E_analytic", "E_numeric", "abs_diff", "nodes"};
  out.table.notes.push_back("convention=physical model=" + to_string(o.model) +
                            " steps=" + std::to_string(o.steps) + " tol=" + fmt(o.tol));
  SolveOptions phys;
  phys.convention = LevelConvention::physical;
  double worst = 0.0;
  double tab_gap = 0.0;
  for (double d : deltas) {
    const PotentialParams p = make_potential(o.v, d);
    ShootingConfig cfg = ShootingConfig::for_delta(d, o.steps);
    cfg.model = o.model;
    for (const auto& qn : states) {
      try {
        const double ea = solve_energy(p, ctx, qn, phys).energy;
        const NumericState num = numeric_eigenvalue(p, ctx, qn, cfg);
        const double diff = std::fabs(ea - num.energy);
        worst = std::max(worst, diff);
        out.table.add({qn.n_r, qn.l, d, ea, num.energy, diff, num.nodes});
        if (diff > o.tol) {
          out.errors.push_back("delta=" + fmt(d) + " " + qn.label() + ": |dE| = " + fmt(diff) +
                               " exceeds " + fmt(o.tol));
          out.exit_code = exit_numeric;
        }
        try {
          tab_gap = std::max(tab_gap, std::fabs(solve_energy(p, ctx, qn).energy - num.energy));
        } catch (const Error&) {
        }
      } catch (const Error& e) {
        out.errors.push_back("delta=" + fmt(d) + " " + qn.label() + ": " + e.what());
        out.exit_code = exit_numeric;
      }
    }
  }
  out.table.notes.push_back("max_abs_diff=" + fmt(worst));
  out.table.notes.push_back("tabulated-convention energies are not eigenvalues of the radial equation: max |E_tabulated - E_numeric| = " +
                            fmt(tab_gap));
  return out;
}

// ---------------------------------------------------------------------------

Outcome cmd_potential(const PotentialOptions& o) {
  if (o.points < 1) throw UsageError("empty grid: --points must be >= 1");
  if (!(o.r_min > 0.0) || !(o.r_max >= o.r_min)) throw UsageError("radius grid needs 0 < r-min <= r-max");
  const PotentialParams p = make_potential(o.v, o.delta);
  Outcome out;
  out.table.columns = {"r", "exact", "approx", "abs_error"};
  out.table.notes.push_back("delta=" + fmt(o.delta) + " b=" + fmt(p.b()));
  if (o.minimum) {
    try {
      const auto m = eckart_minimum(p);
      out.table.notes.push_back("eckart_r0=" + fmt(m.r0) + " eckart_v_min=" + fmt(m.v_min) +
                                " force_constant=" + fmt(m.force_constant));
    } catch (const DomainError& e) {
      out.errors.push_back(e.what());
      out.exit_code = exit_numeric;
    }
  }
  const auto grid = make_radius_grid(o.r_min, o.r_max, o.points, o.spacing);
  const auto prof = make_profile(p, grid);
  for (size_t i = 0; i < prof.r_grid.size(); ++i) {
    out.table.add({prof.r_grid[i], prof.exact[i], prof.approx[i], prof.abs_error[i]});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const Strengths kReference{};

FigureData figure_potential() {
  FigureData f{"fig1_potential", "Exact and approximated potential", {}, "r", {"exact", "approx"}};
  f.table.columns = {"delta", "r", "exact", "approx"};
  const auto grid = make_radius_grid(0.1, 20.0, 200, GridSpacing::linear);
  for (double d : {0.05, 0.10, 0.15, 0.20}) {
    const auto prof = make_profile(make_potential(kReference, d), grid);
    for (size_t i = 0; i < grid.size(); ++i) f.table.add({d, grid[i], prof.exact[i], prof.approx[i]});
  }
  return f;
}

FigureData figure_energy_vs_delta() {
  FigureData f{"fig2_energy_vs_delta", "Energy against delta", {}, "delta", {"E"}};
  f.table.columns = {"n_r", "l", "delta", "E"};
  const PhysicalContext ctx = PhysicalContext::natural();
  for (int n_r = 0; n_r <= 2; ++n_r) {
    for (int l = 0; l <= 3; ++l) {
      const auto qn = QuantumNumbers::make(n_r, l);
      for (int i = 1; i <= 30; ++i) {
        const double d = 0.01 * i;
        try {
          f.table.add({n_r, l, d, solve_energy(make_potential(kReference, d), ctx, qn).energy});
        } catch (const Error& e) {
          f.table.notes.push_back("delta=" + fmt(d) + " " + qn.label() + ": " + e.what());
        }
      }
    }
  }
  return f;
}

FigureData figure_energy_vs_nr() {
  FigureData f{"fig3_energy_vs_nr", "Energy against n_r", {}, "n_r", {"E"}};
  f.table.columns = {"delta", "l", "n_r", "E"};
  const PhysicalContext ctx = PhysicalContext::natural();
  for (double d : {0.05, 0.15}) {
    const PotentialParams p = make_potential(kReference, d);
    for (int l = 0; l <= 5; ++l) {
      for (int n_r = 0; n_r <= 5; ++n_r) {
        const auto qn = QuantumNumbers::make(n_r, l);
        try {
          f.table.add({d, l, n_r, solve_energy(p, ctx, qn).energy});
        } catch (const Error& e) {
          f.table.notes.push_back("delta=" + fmt(d) + " " + qn.label() + ": " + e.what());
        }
      }
    }
  }
  return f;
}

FigureData figure_wavefunctions() {
  FigureData f{"fig4_wavefunctions", "Normalized radial wave functions", {}, "r", {"chi"}};
  f.table.columns = {"n_r", "l", "r", "chi", "chi_sq"};
  const PhysicalContext ctx = PhysicalContext::natural();
  const PotentialParams p = make_potential(kReference, 0.15);
  const auto grid = make_radius_grid(0.05, 15.0, 300, GridSpacing::linear);
  for (int n_r = 0; n_r <= 2; ++n_r) {
    for (int l = 0; l <= 3; ++l) {
      const auto qn = QuantumNumbers::make(n_r, l);
      try {
        const BoundState st = solve_energy(p, ctx, qn);
        for (double r : grid) {
          const double chi = radial_chi(st, r);
          f.table.add({n_r, l, r, chi, chi * chi});
        }
      } catch (const Error& e) {
        f.table.notes.push_back(qn.label() + ": " + e.what());
      }
    }
  }
  return f;
}

FigureData figure_thermo(const std::string& stem, const std::string& title,
                         const std::vector<std::pair<double, int>>& configs) {
  FigureData f{stem, title, {}, "beta", {"Z", "U", "F", "S", "C"}};
  f.table.columns = {"delta", "l", "beta", "Z", "U", "F", "S", "C"};
  const PhysicalContext ctx = PhysicalContext::natural();
  const BetaGrid g;
  const auto betas = beta_grid(g.lo, g.hi, g.points);
  for (const auto& [d, l] : configs) {
    try {
      const auto s = make_nonrel_spectrum(make_potential(kReference, d), ctx, l);
      f.table.notes.push_back(spectrum_note("delta=" + fmt(d) + " l=" + std::to_string(l), s));
      append_thermo_rows(f.table, {d, l}, thermo_curve(s, betas));
    } catch (const Error& e) {
      f.table.notes.push_back("delta=" + fmt(d) + " l=" + std::to_string(l) + ": " + e.what());
    }
  }
  return f;
}

FigureData figure_molecules() {
  FigureData f{"fig7_molecules", "Molecular thermodynamic functions", {}, "beta", {"Z", "U", "F", "S", "C"}};
  f.table.columns = {"molecule", "l", "beta", "Z", "U", "F", "S", "C"};
  const MoleculeStrengths v;
  const auto betas = beta_grid(0.05, 3.0, 60);
  f.table.notes.push_back("units=eV,angstrom,amu V1=" + fmt(v.v1) + " V2=" + fmt(v.v2) +
                          " V3=" + fmt(v.v3) + " V4=" + fmt(v.v4));
  for (const auto& e : default_catalog()) {
    try {
      const auto s = molecule_spectrum(e, v, 0);
      f.table.notes.push_back(spectrum_note(e.name + " l=0", s));
      append_thermo_rows(f.table, {e.name, 0}, thermo_curve(s, betas));
    } catch (const Error& err) {
      f.table.notes.push_back(e.name + ": " + err.what());
    }
  }
  return f;
}

}  // namespace

std::vector<FigureData> build_figures() {
  std::vector<FigureData> out;
  out.push_back(figure_potential());
  out.push_back(figure_energy_vs_delta());
  out.push_back(figure_energy_vs_nr());
  out.push_back(figure_wavefunctions());
  out.push_back(figure_thermo("fig5_thermo_l", "Thermodynamic functions, delta = 0.15",
                              {{0.15, 0}, {0.15, 1}, {0.15, 2}, {0.15, 3}}));
  out.push_back(figure_thermo("fig6_thermo_delta", "Thermodynamic functions, l = 1",
                              {{0.05, 1}, {0.10, 1}, {0.15, 1}, {0.20, 1}}));
  out.push_back(figure_molecules());
  return out;
}

}  // namespace kgb::cli
