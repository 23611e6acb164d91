#include <iostream>

#include "galcrem/cli.hpp"

int main(int argc, char** argv) { return galcrem::run_command(argc, argv, std::cout, std::cerr); }
