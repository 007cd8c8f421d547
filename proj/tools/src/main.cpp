#include <iostream>

#include "asianlt/cli/app.hpp"

int main(int argc, char** argv) { return asianlt::cli::run(argc, argv, std::cout, std::cerr); }
