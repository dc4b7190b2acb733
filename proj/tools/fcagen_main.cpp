#include <iostream>

#include "fcagen/cli.hpp"

int main(int argc, char** argv) {
  return fcagen::cli::main(argc, argv, std::cout, std::cerr);
}
