#include <iostream>
#include <string>
#include <vector>

#include "splicekit_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splicekit::cli::run(args, std::cin, std::cout, std::cerr);
}
