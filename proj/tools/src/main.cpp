#include <iostream>

#include "tifl_cli/commands.hpp"

int main(int argc, char** argv) { return tifl::cli::run(argc, argv, std::cout, std::cerr); }
