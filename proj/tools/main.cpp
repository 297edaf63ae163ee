#include "nilstab/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return nilstab::run_cli(argc, argv, std::cout, std::cerr); }
