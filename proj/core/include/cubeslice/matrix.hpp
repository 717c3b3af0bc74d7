#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "cubeslice/errors.hpp"
#include "cubeslice/rational.hpp"

namespace cubeslice {

/// Dense m x k matrix of exact rationals, row-major. Column i holds the image
/// of the i-th domain basis vector.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
  }

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RatVector column(int c) const;
  RatMatrix transposed() const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& m, const RatVector& v);

// Matrix text format (shared repo-wide): line 1 = "m k"; then m lines of k
// whitespace-separated rationals; '#' starts a comment.
RatMatrix parse_matrix(std::istream& in);
RatMatrix parse_matrix_file(const std::string& path);
RatMatrix parse_matrix_string(const std::string& text);
void format_matrix(std::ostream& out, const RatMatrix& m);
std::string format_matrix(const RatMatrix& m);

// Offset vector file: one line of whitespace-separated rationals.
RatVector parse_vector(std::istream& in);
RatVector parse_vector_file(const std::string& path);

}  // namespace cubeslice
