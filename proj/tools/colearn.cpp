#include "colearn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return colearn::cli::main_entry(args, std::cout, std::cerr);
}
