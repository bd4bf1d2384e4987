#include <iostream>
#include <string>
#include <vector>

#include "chaoscrypt/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return chaoscrypt::run_cli(args, std::cout, std::cerr);
}
