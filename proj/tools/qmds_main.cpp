#include <iostream>
#include <string>
#include <vector>

#include "qmds/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qmds::cli::run(args, std::cout, std::cerr);
}
