#include <iostream>

#include "tmvtool/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return tmv::tool::run(argc, argv, std::cout, std::cerr);
}
