#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return distmagic::cli::run(argc, argv, std::cout, std::cerr);
}
