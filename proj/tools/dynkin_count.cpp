#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "dynkin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dynkin::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return dynkin::cli::kFailure;
  }
}
