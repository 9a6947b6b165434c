#include <iostream>
#include <string>
#include <vector>

#include "balfam/cli.hpp"

int main(int argc, char** argv) {
  return balfam::cli::run(std::vector<std::string>(argv + 1, argv + argc),
                          std::cin, std::cout, std::cerr);
}
