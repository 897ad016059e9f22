#include <iostream>
#include <string>
#include <vector>

#include "lexpp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lexpp::run_command(args, std::cout, std::cerr);
}
