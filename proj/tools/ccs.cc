#include <ccs/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ccs::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
