#include <iostream>

#include "gentile/cli.hpp"

int main(int argc, char** argv) { return gt::cli_dispatch(argc, argv, std::cout, std::cerr); }
