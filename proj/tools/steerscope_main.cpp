#include <iostream>
#include <string>
#include <vector>

#include "steerscope/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return steerscope::cli::run(args, std::cout, std::cerr);
}
