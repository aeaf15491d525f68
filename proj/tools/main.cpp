#include <iostream>

#include "thetagraph/cli.hpp"

int main(int argc, char** argv) { return thetagraph::cli::main_entry(argc, argv, std::cout, std::cerr); }
