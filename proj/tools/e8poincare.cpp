#include "e8/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return e8::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
