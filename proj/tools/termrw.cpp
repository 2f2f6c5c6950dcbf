#include <iostream>

#include "termrw/cli.hpp"

int main(int argc, char** argv) {
  return termrw::run_cli(argc, argv, std::cout, std::cerr);
}
