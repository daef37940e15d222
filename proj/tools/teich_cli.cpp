#include "teich/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return teich::cli::run(argc, argv, std::cout, std::cerr); }
