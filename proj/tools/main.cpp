#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return negaz4::cli::run(argc, argv, std::cout, std::cerr); }
