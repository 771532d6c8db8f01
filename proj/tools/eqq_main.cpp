#include "eqq/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return eqq::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
