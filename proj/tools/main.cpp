#include "baumkuchen/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return baumkuchen::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
