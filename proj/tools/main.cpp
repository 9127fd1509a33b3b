#include <iostream>

#include "kt_hodge_cli.hpp"

int main(int argc, char** argv) { return kt_hodge::cli::run_cli(argc, argv, std::cout, std::cerr); }
