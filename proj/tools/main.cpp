#include "quadpairs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qp::cli::run(argc, argv, std::cout, std::cerr); }
