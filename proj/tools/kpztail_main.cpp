#include <iostream>

#include "kpztail/cli.hpp"

int main(int argc, char** argv) {
    return kpztail::run_cli(argc, argv, std::cout, std::cerr);
}
