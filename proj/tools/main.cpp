#include <iostream>

#include "hypercube/cli_app.hpp"

int main(int argc, char** argv) {
    return hypercube::cli_main(argc, argv, std::cout, std::cerr);
}
