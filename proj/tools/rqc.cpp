#include "rqc/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rqc::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
