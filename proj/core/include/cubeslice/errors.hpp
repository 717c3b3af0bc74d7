#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubeslice {

/// Input exceeds a hard enumeration bound (k > 62, knapsack length > 40, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction parameter violates its stated inequality.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension mismatch between vectors/matrices.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The affine->linear reduction is undefined on an empty intersection.
class EmptyIntersectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// plus_one precondition failed; carries a witness point with no positive
/// image coordinate.
class PositivityError : public std::invalid_argument {
 public:
  PositivityError(const std::string& msg, std::uint64_t witness_bits)
      : std::invalid_argument(msg), witness_bits_(witness_bits) {}
  std::uint64_t witness_bits() const { return witness_bits_; }

 private:
  std::uint64_t witness_bits_;
};

/// Malformed matrix/vector text; carries 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Witness store load/verification failure.
class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubeslice
