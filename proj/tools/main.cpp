#include "arglab/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arglab::cli::run(args, std::cout, std::cerr);
}
