#include <iostream>
#include <string>
#include <vector>

#include "aosce/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return aosce::run(args, std::cout, std::cerr);
}
