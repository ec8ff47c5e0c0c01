#include <iostream>

#include "templeflow/cli.hpp"

int main(int argc, char** argv) { return templeflow::cli::run(argc, argv, std::cout, std::cerr); }
