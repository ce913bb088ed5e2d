#include <iostream>

#include "tropjac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = tropjac::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
