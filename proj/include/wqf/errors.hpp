#pragma once

#include <stdexcept>
#include <string>

namespace wqf {

// An eigendecomposition or factorization failed to converge or produced an
// inconsistent result. Never swallowed: callers see the failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form special case was requested for parameters that do not satisfy
// its preconditions.
class CaseMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested dimension exceeds the configured cap of an O(n^4)-memory path.
class SizeCapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iteration left the trusted region (norm blow-up or non-finite state).
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration_(iteration) {}

  long iteration() const { return iteration_; }

 private:
  long iteration_;
};

}  // namespace wqf
