#include <iostream>

#include "primroot/cli.hpp"

int main(int argc, char** argv) { return primroot::cli::main(argc, argv, std::cout, std::cerr); }
