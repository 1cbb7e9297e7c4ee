#include <iostream>

#include "qentangle/cli.hpp"

int main(int argc, char** argv) {
  return qentangle::cli::run(argc, argv, std::cout, std::cerr);
}
