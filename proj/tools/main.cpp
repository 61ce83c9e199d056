#include <iostream>

#include "qtheta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qtheta::run(args, std::cout, std::cerr);
}
