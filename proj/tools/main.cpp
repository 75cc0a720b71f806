#include <iostream>

#include "specord/cli.hpp"

int main(int argc, char** argv) {
    return specord::cli::run_cli(argc, argv, std::cout, std::cerr);
}
