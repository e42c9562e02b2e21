#include <iostream>

#include "hexad/cli.hpp"

int main(int argc, char** argv) { return hexad::run_cli(argc, argv, std::cout, std::cerr); }
