#include <iostream>
#include <string>
#include <vector>

#include "hookbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hookbound::run_cli(args, std::cout, std::cerr);
}
