#include <iostream>

#include "opetokit/cli.hpp"

int main(int argc, char** argv) {
  return opetokit::run_cli(argc, argv, std::cout, std::cerr);
}
