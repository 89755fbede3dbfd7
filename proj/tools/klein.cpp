#include <iostream>
#include <string>
#include <vector>

#include "klein/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const klein::cli::CommandResult result = klein::cli::run(args, std::cin);
  std::cout << result.output;
  if (result.status != klein::cli::Status::kOk && !result.payload.is_null()) {
    std::cout << result.payload.dump() << "\n";
  }
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  return klein::cli::exit_code(result.status);
}
