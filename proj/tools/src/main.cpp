#include <iostream>

#include "cmprime_cli/cli.hpp"

int main(int argc, char** argv) { return cmprime::cli::run(argc, argv, std::cout, std::cerr); }
