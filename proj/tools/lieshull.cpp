#include <iostream>

#include "lieshull/cli.hpp"

int main(int argc, char** argv) { return lieshull::run(argc, argv, std::cout, std::cerr); }
