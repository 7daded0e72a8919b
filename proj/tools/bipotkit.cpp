#include <iostream>

#include "bipot/cli.hpp"

int main(int argc, char** argv) {
    return bipot::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
