#include <iostream>

#include "lpviz/cli.hpp"

int main(int argc, char** argv) { return lpviz::run(argc, argv, std::cout, std::cerr); }
