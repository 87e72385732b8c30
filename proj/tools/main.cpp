#include <iostream>

#include "uqs/cli.hpp"

int main(int argc, char** argv) {
  return uqs::cli::run_cli(argc, argv, std::cout, std::cerr);
}
