#include <iostream>

#include "sabar/cli.hpp"

int main(int argc, char** argv) { return sabar::cli_main(argc, argv, std::cout, std::cerr); }
