#include <iostream>

#include "octaspec/cli.hpp"

int main(int argc, char** argv) { return octaspec::run_cli(argc, argv, std::cout, std::cerr); }
