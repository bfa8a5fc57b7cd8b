#pragma once

#include <stdexcept>

namespace chaoscover {

// Exit codes shared between the library's error taxonomy and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitBudgetExceeded = 3,
  kExitNumericFailure = 4,
  kExitCensoredPresent = 5,
};

struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size budget (partition words,
// diameter point sets, exact-solver state limits, pairwise solve limits).
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A capped stochastic simulation that did not terminate before its step cap.
struct CensoredSampleError : NumericError {
  using NumericError::NumericError;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidInputError*>(&e)) return kExitInvalidInput;
  if (dynamic_cast<const BudgetExceededError*>(&e)) return kExitBudgetExceeded;
  if (dynamic_cast<const NumericError*>(&e)) return kExitNumericFailure;
  return kExitInvalidInput;
}

}  // namespace chaoscover
