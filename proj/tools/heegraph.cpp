#include <iostream>
#include <string>
#include <vector>

#include "heegraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return heegraph::run_command(args, std::cout, std::cerr);
}
