#include <iostream>

#include "sscx/suites.hpp"

int main(int argc, char** argv) { return sscx::run_cli(argc, argv, std::cout, std::cerr); }
