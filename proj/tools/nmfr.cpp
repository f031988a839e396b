#include <iostream>

#include "nmfr/cli.hpp"

int main(int argc, char** argv) { return nmfr::run_cli(argc, argv, std::cout, std::cerr); }
