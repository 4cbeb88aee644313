#include <iostream>

#include "levelone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return levelone::cli::run(args, std::cout, std::cerr);
}
