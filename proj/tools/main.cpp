#include <iostream>

#include "fp/cli.hpp"

int main(int argc, char** argv) { return fp::cli::run(argc, argv, std::cout, std::cerr); }
