#include <iostream>
#include <string>
#include <vector>

#include "gwcpg_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gwcpg::cli::run_cli(args, std::cout, std::cerr);
}
