#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centlab {

/// Base class for all errors raised by the library.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table failed validation (shape, Latin square,
/// identity, inverses, associativity, or element-order structure).
class NotAGroup : public GroupError {
 public:
  using GroupError::GroupError;
};

/// A constructor or operation was called with arguments outside its domain.
class InvalidParameter : public GroupError {
 public:
  using GroupError::GroupError;
};

/// A requested construction or search exceeds a configured size cap.
class CapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

/// quotient() was asked to factor by a subgroup that is not normal.
class NotNormal : public GroupError {
 public:
  using GroupError::GroupError;
};

/// An internal mathematical invariant failed. Reaching this means either a
/// library bug or an invalid table that slipped past sampled validation;
/// it is never an expected outcome for well-formed inputs.
class InvariantViolation : public GroupError {
 public:
  using GroupError::GroupError;
};

/// Group-spec text could not be parsed; carries the offending position.
class ParseError : public GroupError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : GroupError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace centlab
