#include "kgbound/cli/table.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "kgbound/core.hpp"

namespace kgb::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("unknown format '" + name + "' (use csv or json)");
}

std::string extension(Format f) { return f == Format::json ? ".json" : ".csv"; }

void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::csv) {
    CsvWriter csv(os);
    for (const auto& n : t.notes) csv.comment(n);
    std::ostringstream header;
    for (size_t i = 0; i < t.columns.size(); ++i) header << (i ? "," : "") << t.columns[i];
    os << header.str() << '\n';
    for (const auto& r : t.rows) csv.row(r);
    return;
  }
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (size_t i = 0; i < t.columns.size() && i < r.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                rec[t.columns[i]] = v;
              } else {
                rec[t.columns[i]] = nullptr;
              }
            } else {
              rec[t.columns[i]] = v;
            }
          },
          r[i]);
    }
    records.push_back(std::move(rec));
  }
  os << records.dump(1) << '\n';
}

std::string gnuplot_script(const Table& t, const std::string& data_path, const std::string& x,
                           const std::vector<std::string>& ys, const std::string& title) {
  auto column_of = [&](const std::string& name) {
    for (size_t i = 0; i < t.columns.size(); ++i) {
      if (t.columns[i] == name) return static_cast<int>(i) + 1;
    }
    throw DomainError("no column '" + name + "' to plot");
  };
  std::ostringstream gp;
  gp << "set datafile separator ','\n"
     << "set datafile commentschars '#'\n"
     << "set key autotitle columnhead\n"
     << "set title '" << title << "'\n"
     << "set xlabel '" << x << "'\n";
  if (ys.size() > 1) gp << "set multiplot layout " << ys.size() << ",1\n";
  for (const auto& y : ys) {
    gp << "set ylabel '" << y << "'\n"
       << "plot '" << data_path << "' using " << column_of(x) << ':' << column_of(y)
       << " with lines\n";
  }
  if (ys.size() > 1) gp << "unset multiplot\n";
  gp << "pause -1\n";
  return gp.str();
}

}  // namespace kgb::cli
