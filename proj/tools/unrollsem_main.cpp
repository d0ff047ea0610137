#include <iostream>
#include <vector>

#include "unrollsem/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return unrollsem::run_cli(args, std::cout, std::cerr);
}
