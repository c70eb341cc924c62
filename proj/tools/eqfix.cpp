#include "eqfix/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return eqfix::run_cli(argc, argv, std::cout, std::cerr); }
