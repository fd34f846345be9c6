#include <iostream>

#include "hopfalg/cli.hpp"

int main(int argc, char** argv) {
  return hopfalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
