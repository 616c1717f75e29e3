#include <iostream>

#include "mapalg/cli.hpp"

int main(int argc, char** argv) {
  return mapalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
