#include <iostream>
#include <vector>

#include "fallcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fallcalc::runCli(args, std::cout, std::cerr);
}
