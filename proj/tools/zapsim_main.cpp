// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <iostream>

#include "zapsim/cli.hpp"

int main(int argc, char** argv) {
    return zapsim::run_cli(argc, argv, std::cout, std::cerr);
}
