#include "dtt/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return dtt::cli::run(argc, argv, std::cout, std::cerr);
}
