#pragma once

#include <stdexcept>
#include <string>

namespace hopfpar {

// Inconsistent sizes between matrices, structure tensors or modules.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input does not satisfy an operation's precondition (not a group table,
// not idempotent, not an intertwiner, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A property that must hold for valid input failed at runtime. These are the
// theorem-backed assertions; hitting one means the input was not what it
// claimed to be, or there is a bug.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw AxiomViolation(what);
}

inline void require_dims(bool cond, const std::string& what) {
  if (!cond) throw DimensionError(what);
}

}  // namespace detail
}  // namespace hopfpar
