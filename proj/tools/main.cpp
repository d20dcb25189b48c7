#include <iostream>

#include "segre/cli.hpp"

int main(int argc, char** argv) {
  return segre::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
