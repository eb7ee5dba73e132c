#include <iostream>

#include "cayleycodes/cli.hpp"

int main(int argc, char** argv) {
  return cayleycodes::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
