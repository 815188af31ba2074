#include <iostream>

#include "vfc/cli/commands.hpp"

int main(int argc, char** argv) { return vfc::cli::run(argc, argv, std::cout, std::cerr); }
