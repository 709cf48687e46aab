#include <iostream>

#include "symsig/cli.hpp"

int main(int argc, char** argv) { return symsig::cli::main_entry(argc, argv, std::cout, std::cerr); }
