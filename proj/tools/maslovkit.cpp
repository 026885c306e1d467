#include <unistd.h>

#include <iostream>

#include "maslovkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    maslovkit::cli::Options opts;
    opts.color = maslovkit::cli::color_from_env(isatty(STDOUT_FILENO) != 0);
    return maslovkit::cli::run(args, std::cout, std::cerr, opts);
}
