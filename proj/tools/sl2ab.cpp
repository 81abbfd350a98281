#include <iostream>
#include <string>
#include <vector>

#include "sl2ab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sl2ab::cli::run(args, std::cout, std::cerr);
}
