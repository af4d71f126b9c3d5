#include <iostream>

#include "hmono/cli.hpp"

int main(int argc, char** argv) { return hmono::cli::run(argc, argv, std::cout, std::cerr); }
