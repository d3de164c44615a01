#include <iostream>

#include "gstest/cli.hpp"

int main(int argc, char** argv) {
  return gstest::run_cli(argc, argv, std::cout, std::cerr);
}
