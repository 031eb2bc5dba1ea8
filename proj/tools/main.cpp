#include "arith/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return arith::cli::run(argc, argv, std::cout, std::cerr); }
