#pragma once

#include <stdexcept>
#include <string>

namespace permuto {

/// A monomial whose exponents do not sum to the number of simple roots.
class InvalidDegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A block profile (m, l, r) that does not satisfy 2m + l + r = i.
class InvalidProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An evaluation point with two equal coordinates.
class DegeneratePointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by enumeration routines whose input exceeds the tractable range.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that contradicts a proven identity. Never expected to fire.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace permuto
