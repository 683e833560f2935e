#include "torsor/cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return torsor::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
