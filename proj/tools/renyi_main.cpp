#include <iostream>

#include "renyi/cli.hpp"

int main(int argc, char** argv) { return renyi::run_cli(argc, argv, std::cout, std::cerr); }
