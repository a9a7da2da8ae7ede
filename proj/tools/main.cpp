#include <iostream>

#include "qfric/cli.hpp"

int main(int argc, char** argv) {
  return qfric::cli::main_entry(argc, argv, std::cout, std::cerr);
}
