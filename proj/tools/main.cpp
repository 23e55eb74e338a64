#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lmocli::run(argc, argv, std::cout, std::cerr); }
