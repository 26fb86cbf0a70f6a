#pragma once

#include <string>
#include <vector>

namespace indturan {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;  // violation found, or the searched structure is absent
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInputError = 3;

struct CommandOutput {
  int exit_code = kExitPass;
  std::string out;  // rows or graph text
  std::string err;  // error JSON on failure
};

// Runs one command line (without the program name) and captures its output.
CommandOutput run_command(const std::vector<std::string>& args);

}  // namespace indturan
