#include <iostream>
#include <string>
#include <vector>

#include "srkit/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return srkit::cli::run(args, std::cout, std::cerr, std::cin);
}
