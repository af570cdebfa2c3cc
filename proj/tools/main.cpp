#include <iostream>

#include "equm/cli.hpp"

int main(int argc, char** argv) { return equm::run_cli(argc, argv, std::cout, std::cerr); }
