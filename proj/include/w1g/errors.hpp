#pragma once

#include <stdexcept>
#include <string>

namespace w1g {

/// Two operands carry different genera (or a container exceeds kMaxGenus).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the declared window of a windowed object,
/// or a window description is malformed.
class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace w1g
