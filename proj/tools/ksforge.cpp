#include <iostream>
#include <string>
#include <vector>

#include "ksforge/cli.hpp"

int main(int argc, char** argv) {
    std::ios_base::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return ksforge::cli::run(args, std::cin, std::cout, std::cerr);
}
