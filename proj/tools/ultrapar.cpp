#include <iostream>

#include "ultrapar/cli.hpp"

int main(int argc, char** argv) {
  return ultrapar::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
