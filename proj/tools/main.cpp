#include <iostream>
#include <string>
#include <vector>

#include "bzt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        auto spec = bzt::cli::parse_args(args, std::cout);
        if (!spec.has_value()) return 0;
        return bzt::cli::run(*spec, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
