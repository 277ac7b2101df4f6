#include <iostream>
#include <string>
#include <vector>

#include "hypbr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hypbr::cli::main_impl(args, std::cout, std::cerr);
}
