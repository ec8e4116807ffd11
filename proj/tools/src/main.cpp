#include <iostream>

#include "monogen_cli/cli.hpp"

int main(int argc, char** argv) { return monogen::cli::run(argc, argv, std::cout, std::cerr); }
