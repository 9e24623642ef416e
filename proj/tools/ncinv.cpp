#include <iostream>

#include "ncinv/cli.hpp"

int main(int argc, char** argv) {
  return ncinv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
