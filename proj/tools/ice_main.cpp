#include <iostream>

#include "ice/cli.hpp"

int main(int argc, char** argv) { return ice::cli::run(argc, argv, std::cout, std::cerr); }
