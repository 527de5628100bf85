#include <iostream>

#include "strategem/cli.hpp"

int main(int argc, char** argv) {
  return strategem::cli::run(argc, argv, std::cout, std::cerr);
}
