#include <iostream>

#include "crossforge/cli.hpp"

int main(int argc, char** argv) {
    return crossforge::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
