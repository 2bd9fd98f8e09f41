#include <maxsurf/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return maxsurf::cli_main(argc, argv, std::cout, std::cerr);
}
