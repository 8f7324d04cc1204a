#include <iostream>
#include <string>
#include <vector>

#include "arithsurf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = arithsurf::cli::dispatch(args);
  for (const auto& line : result.lines) std::cout << line.dump() << '\n';
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << '\n';
  return arithsurf::cli::exit_code(result.status);
}
