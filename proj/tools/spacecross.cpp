#include "spacecross/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return spacecross::run_cli(argc, argv, std::cout, std::cerr); }
