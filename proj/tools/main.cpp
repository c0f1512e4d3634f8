#include <iostream>

#include "ddct/cli.hpp"

int main(int argc, char** argv)
{
    return ddct::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
