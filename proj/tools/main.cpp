#include "leibniz_cli.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // Buffer stdout so a failing command never leaves partial output behind.
  std::ostringstream out;
  const int code = leibniz::cli::run(args, out, std::cerr);
  std::cout << out.str();
  return code;
}
