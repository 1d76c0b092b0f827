#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "kgbound/thermo.hpp"

namespace kgb {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& text, int line) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw DomainError("catalog line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return v;
}

// lambda at l = 0 for V1 = v, V2 = v/2, V3 = V4 = 0; NaN without bound levels.
double eckart_family_lambda(const MoleculeEntry& entry, double v) {
  try {
    return molecule_spectrum(entry, MoleculeStrengths{v, 0.5 * v, 0.0, 0.0}, 0).lambda_max;
  } catch (const NoBoundStateError&) {
    return std::nan("");
  }
}

// Smallest V with lambda(V) >= level, by bracketing then bisection.
double strength_for_lambda(const MoleculeEntry& entry, double level) {
  double lo = 0.0;
  double hi = 1.0;
  while (!(eckart_family_lambda(entry, hi) >= level)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw DomainError("strength search diverged");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eckart_family_lambda(entry, mid) >= level ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

const std::vector<MoleculeEntry>& default_catalog() {
  static const std::vector<MoleculeEntry> catalog = {
      {"LiH", 1.1280, 0.8801221},
      {"HCl", 1.8677, 0.9801045},
      {"CuLi", 1.00818, 6.259494},
      {"NiC", 2.25297, 9.974265},
  };
  return catalog;
}

std::vector<MoleculeEntry> load_catalog(std::istream& is) {
  std::vector<MoleculeEntry> out;
  std::string line;
  int number = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!header_seen) {
      if (cells != std::vector<std::string>{"name", "delta", "mu"}) {
        throw DomainError("catalog line " + std::to_string(number) + ": expected header name,delta,mu");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 3 || cells[0].empty()) {
      throw DomainError("catalog line " + std::to_string(number) + ": expected name,delta,mu");
    }
    const double delta = parse_number(cells[1], number);
    const double mu = parse_number(cells[2], number);
    if (!(delta > 0.0) || !(mu > 0.0)) {
      throw DomainError("catalog line " + std::to_string(number) + ": delta and mu must be positive");
    }
    out.push_back({cells[0], delta, mu});
  }
  if (!header_seen) throw DomainError("catalog is empty (a header row name,delta,mu is required)");
  return out;
}

std::vector<MoleculeEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog file '" + path + "'");
  return load_catalog(in);
}

std::optional<MoleculeEntry> find_molecule(std::span<const MoleculeEntry> catalog,
                                           const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

PhysicalContext molecule_context(const MoleculeEntry& entry) {
  return PhysicalContext::molecular(entry.mu);
}

PotentialParams molecule_params(const MoleculeEntry& entry, const MoleculeStrengths& v) {
  return PotentialParams::make(v.v1, v.v2, v.v3, v.v4, entry.delta);
}

NonRelSpectrum molecule_spectrum(const MoleculeEntry& entry, const MoleculeStrengths& v, int l) {
  try {
    return make_nonrel_spectrum(molecule_params(entry, v), molecule_context(entry), l);
  } catch (const NoBoundStateError& e) {
    throw NoBoundStateError(entry.name + ": " + e.what());
  }
}

std::vector<StrengthProbe> explore_strengths(std::span<const MoleculeEntry> catalog,
                                             std::span<const double> strengths) {
  std::vector<StrengthProbe> out;
  for (const auto& entry : catalog) {
    for (double v : strengths) {
      const double lambda = eckart_family_lambda(entry, v);
      const int n = std::isnan(lambda) ? -1 : cutoff_from_lambda(lambda);
      out.push_back({entry.name, v, lambda, n});
    }
  }
  return out;
}

std::optional<StrengthWindow> strength_window(const MoleculeEntry& entry, int target) {
  if (target < 0) return std::nullopt;
  const double lo = target == 0 ? 0.0 : strength_for_lambda(entry, target - 0.5);
  const double hi = strength_for_lambda(entry, target + 0.5);
  if (!(hi > lo)) return std::nullopt;
  return StrengthWindow{lo, hi};
}

}  // namespace kgb
