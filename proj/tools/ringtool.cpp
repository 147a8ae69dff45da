#include <iostream>

#include "socle/cli.hpp"

int main(int argc, char** argv) { return socle::run_cli(argc, argv, std::cout, std::cerr); }
