#include <iostream>
#include <string>
#include <vector>

#include "listcol/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return listcol::cli_main(args, std::cout, std::cerr);
}
