#include <iostream>
#include <string>
#include <vector>

#include "moiredb_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return moiredb::cli::run(args, std::cout, std::cerr);
}
