#include <iostream>
#include <string>
#include <vector>

#include "bmw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bmw::cli::Outcome o = bmw::cli::run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
