#include <iostream>

#include "pwalk/cli.hpp"

int main(int argc, char** argv) { return pwalk::cli_main(argc, argv, std::cout, std::cerr); }
