#include <iostream>
#include <string>
#include <vector>

#include "bellconv/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return bellconv::cli::run(args, std::cout, std::cerr);
}
