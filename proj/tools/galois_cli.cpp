#include <iostream>

#include "galois/cli.hpp"

int main(int argc, char** argv) { return galois::run_cli(argc, argv, std::cout, std::cerr); }
