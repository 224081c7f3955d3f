#pragma once

#include <cstddef>
#include <vector>

#include "ew/rational.hpp"

namespace ew {

using RVector = std::vector<Rational>;

/// Dense exact matrix, row-major.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// All rows must have the same length.
  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RVector row(std::size_t i) const;
  RVector apply(const RVector& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RMatrix& m);
std::size_t rank(RMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RVector> nullspace(const RMatrix& m);

/// Canonical (RREF) basis of the span of the given vectors of length dim.
std::vector<RVector> span_basis(const std::vector<RVector>& vectors, std::size_t dim);
std::size_t span_dim(const std::vector<RVector>& vectors, std::size_t dim);
bool same_span(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim);
/// span(b) contained in span(a).
bool span_contains(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim);

/// Unit vector e_i of length dim.
RVector unit_vector(std::size_t dim, std::size_t i);

}  // namespace ew
