#include <iostream>
#include <string>
#include <vector>

#include "panast/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return panast::run_cli(args, std::cout, std::cerr);
}
