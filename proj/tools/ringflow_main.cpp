#include <iostream>
#include <string>
#include <vector>

#include "ringflow/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ringflow::cli::run(args, std::cout, std::cerr);
}
