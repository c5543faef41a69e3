#include <iostream>

#include "frl/cli.hpp"

int main(int argc, char** argv) {
  return frl::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
