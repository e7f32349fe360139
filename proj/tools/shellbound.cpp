#include <iostream>

#include "shellbound/cli/app.hpp"

int main(int argc, char** argv) { return shellbound::cli::run(argc, argv, std::cout, std::cerr); }
