#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return spectral_entropy::cli::run(argc, argv, std::cout, std::cerr);
}
