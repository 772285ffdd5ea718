#include <iostream>

#include "polyfam/cli.hpp"

int main(int argc, char** argv) { return polyfam::run_cli(argc, argv, std::cout, std::cerr); }
