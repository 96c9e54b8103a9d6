#include <iostream>

#include "sylvester/cli.hpp"

int main(int argc, char** argv) {
    return sylvester::run_cli(argc, argv, std::cout, std::cerr);
}
