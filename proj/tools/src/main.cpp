#include <iostream>

#include "chordarc_cli/cli.hpp"

int main(int argc, char** argv) {
  return chordarc::cli::main(argc, argv, std::cout, std::cerr);
}
