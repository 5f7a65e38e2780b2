#include <iostream>

#include "lieq/cli.hpp"

int main(int argc, char** argv) { return lieq::cli_main(argc, argv, std::cout, std::cerr); }
