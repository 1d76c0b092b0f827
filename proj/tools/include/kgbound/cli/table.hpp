#pragma once

// Tabular command output rendered as CSV or JSON.

#include <iosfwd>
#include <string>
#include <vector>

#include "kgbound/csv.hpp"

namespace kgb::cli {

enum class Format { csv, json };

Format parse_format(const std::string& name);
std::string extension(Format f);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<CsvWriter::Cell>> rows;
  /// Free-form notes: `# note` lines in CSV, stderr in JSON.
  std::vector<std::string> notes;

  void add(std::vector<CsvWriter::Cell> row) { rows.push_back(std::move(row)); }
};

/// CSV: notes, header, rows. JSON: an array of records keyed by column name
/// (non-finite numbers become null).
void write_table(std::ostream& os, const Table& t, Format f);

/// gnuplot script plotting `ys` against `x` from a CSV data file.
std::string gnuplot_script(const Table& t, const std::string& data_path, const std::string& x,
                           const std::vector<std::string>& ys, const std::string& title);

}  // namespace kgb::cli
