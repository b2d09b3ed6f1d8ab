#include <iostream>

#include "scrimkit/cli.hpp"

int main(int argc, char** argv) { return scrimkit::run_cli(argc, argv, std::cout, std::cerr); }
