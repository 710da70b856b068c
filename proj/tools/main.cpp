#include <iostream>
#include <string>
#include <vector>

#include "dlverb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dlverb::main_entry(args, std::cout, std::cerr);
}
