#include "pdaw/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pdaw::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
