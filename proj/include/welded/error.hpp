#pragma once

#include <stdexcept>
#include <string>

namespace welded {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable counts, or a matrix has the wrong shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An exact division was requested that does not divide.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of an operation (e.g. substituting 0 for a variable).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Grade mismatch between exterior tensors.
class GradeError : public Error {
 public:
  using Error::Error;
};

/// Subsets that were required to be disjoint overlap.
class DisjointnessError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a textual input, with 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A diagram or circuit failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A Reidemeister-type move does not match the diagram at the given site.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent wiring handed to a contraction.
class WiringError : public Error {
 public:
  using Error::Error;
};

/// Circuit composition or tangle gluing with incompatible interfaces.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Malformed split specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Input does not have the shape an operation requires (e.g. not a braid).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace welded
