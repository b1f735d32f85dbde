#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return elastic::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
