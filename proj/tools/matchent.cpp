#include "matchent/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return matchent::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
