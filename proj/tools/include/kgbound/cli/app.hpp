#pragma once

#include <iosfwd>

namespace kgb::cli {

/// Parses argv, runs one command and returns its exit code (0 ok, 1 numeric
/// failure, 2 usage error). Data goes to `out` unless --output is given;
/// diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgb::cli
