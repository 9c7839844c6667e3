#include <cstdlib>
#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv("APCOPRIME_FORMAT");
    return apcoprime::cli::run(args, std::cin, std::cout, std::cerr, env ? env : "");
}
