#include <iostream>

#include "ew/cli.hpp"

int main(int argc, char** argv) {
  return ew::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
