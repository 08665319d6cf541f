#include <iostream>

#include "lcsext/cli/commands.hpp"

int main(int argc, char** argv) { return lcsext::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
