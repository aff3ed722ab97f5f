#include <iostream>
#include <string>
#include <vector>

#include "srgswitch/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return srgsw::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
