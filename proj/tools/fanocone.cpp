#include <cstdlib>
#include <exception>
#include <iostream>

#include "fanocone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* threads = std::getenv("FANOCONE_THREADS");
    try {
        return fanocone::cli::run(args, std::cout, std::cerr, threads ? threads : "");
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
