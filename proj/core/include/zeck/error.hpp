#pragma once

#include <stdexcept>
#include <string>

namespace zeck {

/// A digit word that is not a Zeckendorf word (stray characters or an "11").
class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the range an operation is defined on.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two branches of an occurrence set produced the same value.
class OverlapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zeck
