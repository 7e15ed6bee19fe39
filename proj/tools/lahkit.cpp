#include "lahkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lahkit::cli::run(argc, argv, std::cout, std::cerr); }
