// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>
#include "swanson/cli.hpp"

int main(int argc, char **argv)
{
  const std::vector<std::string> args(argv + 1, argv + argc);
  return swanson::cli::run(args, std::cout, std::cerr);
}
