#ifndef FAITHDIM_ERRORS_HPP
#define FAITHDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace faithdim {

// Bad user input (malformed file, non-prime modulus, dimension mismatch...).
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation that is refused rather than wrong: prime below the bad-prime
// bound, instance too large for the requested exact mode.  Exit code 2.
struct refusal : std::runtime_error {
  explicit refusal(const std::string& msg) : std::runtime_error(msg) {}
};

// Invariant violation inside the library; always a bug.  Exit code 3.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace faithdim

#endif
