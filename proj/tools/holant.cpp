#include <iostream>

#include "holant/cli.hpp"

int main(int argc, char **argv)
{
    return holant::run(argc, argv, std::cout, std::cerr);
}
