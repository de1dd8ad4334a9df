#include <iostream>
#include <string>
#include <vector>

#include "hms/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out, err;
    const int code = hms::run_command(args, out, err);
    if (!out.empty()) std::cout << out;
    if (!err.empty()) std::cerr << err;
    return code;
}
