#include <iostream>

#include "kgbound/cli/app.hpp"

int main(int argc, char** argv) { return kgb::cli::run_cli(argc, argv, std::cout, std::cerr); }
