#include <iostream>

#include "chardom/cli.hpp"

int main(int argc, char** argv) {
  return chardom::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
