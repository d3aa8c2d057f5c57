#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrlog/rational.hpp"

namespace arrlog {

/// Dense matrix of rationals, row major. Small sizes only; every
/// elimination is exact (no pivot scaling tricks, no rounding).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec row(size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivot_cols;
  size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the RREF with
/// that free variable set to 1 (ascending free-column order).
std::vector<Vec> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Row vector times matrix; this is how linear forms transform.
Vec row_times_matrix(const Vec& v, const Matrix& m);

/// Incremental row space, used for rank and membership tests.
class RowSpace {
 public:
  /// Inserts the vector; returns true if it enlarged the span.
  bool add(Vec v);
  bool contains(Vec v) const;
  size_t rank() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;  // echelonized, leading entry 1
};

}  // namespace arrlog
