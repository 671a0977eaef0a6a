#include <iostream>

#include "mvpoly/cli.hpp"

int main(int argc, char** argv) {
    return mvpoly::cli::run(argc, argv, std::cout, std::cerr);
}
