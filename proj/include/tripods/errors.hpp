#pragma once

#include <stdexcept>
#include <string>

namespace tripods {

/// Raised when an exact integer computation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A quadruple or point pair that does not span a tripod. `predicate` names
/// the first condition that failed ("nonzero", "collinear", "orientation",
/// "angle_condition", ...).
class InvalidTripod : public std::invalid_argument {
 public:
  InvalidTripod(std::string predicate, const std::string& what)
      : std::invalid_argument(what), predicate_(std::move(predicate)) {}

  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

}  // namespace tripods
