#include <iostream>

#include "segre/cli.hpp"

int main(int argc, char** argv) {
    return segre::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
