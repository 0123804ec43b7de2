#include <iostream>

#include "f4g/cli.hpp"

int main(int argc, char** argv) {
    const f4g::CommandResult r = f4g::run_command(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
