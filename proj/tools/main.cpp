#include <iostream>
#include <string>
#include <vector>

#include "paracon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return paracon::run_cli(args, std::cout, std::cerr);
}
