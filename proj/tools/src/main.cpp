#include <iostream>

#include "b3cert/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = b3cert::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
