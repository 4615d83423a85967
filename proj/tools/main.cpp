#include <iostream>

#include "contact/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return contact::run(args, std::cout, std::cerr);
}
