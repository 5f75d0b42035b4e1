#include <iostream>

#include "tid/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const tid::cli::CommandResult r = tid::cli::run(args);
  if (r.exitCode == 2) {
    std::cerr << r.text;
  } else if (r.json) {
    std::cout << r.json->dump(2) << '\n';
  } else {
    std::cout << r.text;
  }
  return r.exitCode;
}
