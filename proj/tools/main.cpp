#include <iostream>

#include "edalab/cli.hpp"

int main(int argc, char** argv) {
  return edalab::run_cli(argc, argv, std::cout, std::cerr);
}
