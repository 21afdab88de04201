#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<const char*> args(argv, argv + argc);
    return feltfp::cli::run(std::span<const char* const>(args.data(), args.size()), std::cout,
                            std::cerr);
}
