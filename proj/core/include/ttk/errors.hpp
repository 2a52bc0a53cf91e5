#pragma once

#include <stdexcept>
#include <string>

namespace ttk {

/// Raised when an argument violates an operation's preconditions
/// (invalid knot parameters, non-coprime pairs, malformed word text, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Whitehead orbit search exhausts its node budget.
/// A search that runs out of budget never reports an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by an internal consistency check (e.g. two routes to the
/// same integer disagreeing). Indicates a bug or a transcription error.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ttk
