#include <iostream>
#include <string>
#include <vector>

#include "owb/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return owb::run(args, std::cout, std::cerr);
}
