#include <iostream>
#include <string>
#include <vector>

#include "sixcircles/cli.hpp"

int main(int argc, char** argv) {
  return sixcircles::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
