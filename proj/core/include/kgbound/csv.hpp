#pragma once

/// \file csv.hpp
/// Minimal deterministic CSV emission: shortest round-trip formatting of doubles.

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kgb {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

class CsvWriter {
 public:
  using Cell = std::variant<double, long long, int, std::string>;

  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(std::initializer_list<std::string_view> names);
  void row(std::initializer_list<Cell> cells);
  void row(const std::vector<Cell>& cells);
  /// `# text` line; readers configured with a comment character skip it.
  void comment(std::string_view text);

 private:
  std::ostream& os_;
};

}  // namespace kgb
