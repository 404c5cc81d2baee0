#include "zetakit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zetakit::cli::run(argc, argv, std::cout, std::cerr); }
