// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "altsum/cli.hpp"

int main(int argc, char** argv) {
  try {
    return altsum::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 3;
  }
}
