#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "asg/cli.hpp"

int main(int argc, char** argv) {
    asg::cli::Environment env;
    env.color = std::getenv("SEMIGROUP_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    std::vector<std::string> args(argv + 1, argv + argc);
    return asg::cli::run(args, std::cout, std::cerr, env);
}
