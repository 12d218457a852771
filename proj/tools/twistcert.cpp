#include <iostream>

#include "twistcert/cli.hpp"

int main(int argc, char** argv) { return twistcert::run_cli(argc, argv, std::cout, std::cerr); }
