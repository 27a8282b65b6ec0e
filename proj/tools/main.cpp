#include <iostream>

#include "treespectra/cli.hpp"

int main(int argc, char** argv) {
    return treespectra::cli::run(argc, argv, std::cout, std::cerr);
}
