#pragma once

#include <stdexcept>
#include <string>

namespace conjrank {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size bound (group order, subgroup count, ...) was exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct NotASubgroup : Error {
  using Error::Error;
};

struct NotAPGroup : Error {
  using Error::Error;
};

// Burnside elements over different groups were combined.
struct ClassMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// |S| does not divide the biset size.
struct IndexError : Error {
  using Error::Error;
};

// A biset offered for verification violates one of the required
// hypotheses (stable / generated / contains the regular biset).
struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& which)
      : Error("hypothesis failed: " + which), hypothesis(which) {}
  std::string hypothesis;
};

// Invariant violations that indicate a bug rather than bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace conjrank
