#include <iostream>

#include "conjp/cli.hpp"

int main(int argc, char** argv) { return conjp::run_cli(argc, argv, std::cout, std::cerr); }
