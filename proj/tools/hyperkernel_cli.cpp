#include <iostream>

#include "hyperkernel/cli.hpp"

int main(int argc, char** argv) {
  return hyperkernel::cli::main_entry(argc, argv, std::cout, std::cerr);
}
