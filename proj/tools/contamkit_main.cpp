#include <string>
#include <vector>

#include "contamkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return contamkit::run_command(args);
}
