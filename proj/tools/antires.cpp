#include <iostream>

#include "antires/cli.hpp"

int main(int argc, char** argv) {
  return antires::run_cli(argc, argv, std::cout, std::cerr);
}
