#include <iostream>
#include <string>
#include <vector>

#include "trigrearr/cli.hpp"

int main(int argc, char** argv)
{
    return trigrearr::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
