#include <iostream>

#include "fiedler/cli.hpp"

int main(int argc, char** argv) { return fiedler::cli::run_cli(argc, argv, std::cout, std::cerr); }
