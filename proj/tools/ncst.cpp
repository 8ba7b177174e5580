#include <iostream>

#include "ncst/cli.hpp"

int main(int argc, char** argv) { return ncst::run_cli(argc, argv, std::cout, std::cerr); }
