#include <iostream>
#include <vector>

#include "interlace/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return interlace::cli_run(args, std::cout, std::cerr);
}
