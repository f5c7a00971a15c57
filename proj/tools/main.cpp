#include "liecensus/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return liecensus::cli::run(argc, argv, std::cout, std::cerr);
}
