#include <iostream>

#include "quatmob/cli.hpp"

int main(int argc, char** argv) {
    return quatmob::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
