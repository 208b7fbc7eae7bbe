#include <iostream>

#include "gw_cli.hpp"

int main(int argc, char** argv) { return gw::cli::run_cli(argc, argv, std::cout, std::cerr); }
