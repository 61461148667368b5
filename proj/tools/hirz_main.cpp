#include <iostream>

#include "hirz/cli.hpp"

int main(int argc, char** argv) { return hirz::cli::run(argc, argv, std::cout, std::cerr); }
