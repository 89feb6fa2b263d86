#include <tclique/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return tclique::run(args, std::cin, std::cout, std::cerr);
}
