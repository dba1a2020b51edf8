#include <iostream>

#include "qpart_cli.hpp"

int main(int argc, char** argv) { return qpart::cli::run_cli(argc, argv, std::cout, std::cerr); }
