#include <iostream>
#include <string>
#include <vector>

#include "jordan/cli/app.hpp"

int main(int argc, char** argv) {
  return jordan::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
