#include <iostream>

#include "pdbell/cli.hpp"

int main(int argc, char** argv) { return pdbell::cli::run_cli(argc, argv, std::cout, std::cerr); }
