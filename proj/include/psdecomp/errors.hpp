#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psdecomp {

/// Malformed input: bad type label, out-of-range node, dimension mismatch,
/// unparsable weight.  The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but violates a structural hypothesis of the
/// decomposition theorem (lambda0 off H_1, trivial w0, w0 outside the
/// stabilizer).  These are errors rather than verdicts.
class StructuralError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An operation's precondition does not hold (lengths do not add, the two
/// critical hyperplanes coincide, the line lies inside a hyperplane, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Refusal to enumerate a finite group that is larger than the active cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t order)
      : std::length_error(what), order_(order) {}

  std::uint64_t order() const noexcept { return order_; }

 private:
  std::uint64_t order_;
};

/// Internal consistency failure: two independent computations disagree.
/// Never expected; raised loudly so a bug cannot hide behind a verdict.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psdecomp
