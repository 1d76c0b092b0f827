#include "kgbound/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace kgb {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

namespace {

std::string cell_text(const CsvWriter::Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

void CsvWriter::header(std::initializer_list<std::string_view> names) {
  bool first = true;
  for (auto n : names) {
    if (!first) os_ << ',';
    os_ << n;
    first = false;
  }
  os_ << '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells) { row(std::vector<Cell>(cells)); }

void CsvWriter::row(const std::vector<Cell>& cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os_ << ',';
    os_ << cell_text(c);
    first = false;
  }
  os_ << '\n';
}

void CsvWriter::comment(std::string_view text) { os_ << "# " << text << '\n'; }

}  // namespace kgb
