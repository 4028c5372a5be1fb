#pragma once

#include <stdexcept>
#include <string>

namespace ksix {

/// Raised when an input violates a mathematical precondition: an ill-defined
/// homomorphism, a complex with torsion where a free one is required, a
/// connecting map that fails its exactness gate.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured bound.
class BoundExceeded : public MathError {
 public:
  BoundExceeded(const std::string& what, std::string count)
      : MathError(what + " (count " + count + ")"), count_(std::move(count)) {}

  /// Decimal rendering of the count that tripped the bound.
  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

}  // namespace ksix
