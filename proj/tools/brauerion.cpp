#include <iostream>

#include "brauerion/cli.hpp"

int main(int argc, char** argv) { return brauerion::run_cli(argc, argv, std::cout, std::cerr); }
