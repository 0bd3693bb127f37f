#include <iostream>

#include "multireg/cli.hpp"

int main(int argc, char** argv) { return multireg::run_cli(argc, argv, std::cout, std::cerr); }
