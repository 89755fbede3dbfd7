#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace klein::cli {

enum class Status {
  kOk,
  kDomainError,
  kResourceError,
  kConvergenceError,
  kVerificationFailure,
};

// 0, 2, 3, 4, 5 respectively.
int exit_code(Status status);
const char* status_name(Status status);

struct CommandResult {
  Status status = Status::kOk;
  nlohmann::json payload;   // valid JSON whenever status is kOk
  std::string diagnostics;  // for the error stream
  std::string output;       // exact text for the output stream
};

// Runs one command line (without the program name). Inputs named "-" are
// read from `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace klein::cli
