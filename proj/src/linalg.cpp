#include "ew/linalg.hpp"

#include "ew/errors.hpp"

namespace ew {

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("matrix rows have inconsistent length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RVector RMatrix::row(std::size_t i) const { return RVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

RVector RMatrix::apply(const RVector& x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector length mismatch");
  RVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

std::vector<std::size_t> rref(RMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RMatrix m) { return rref(m).size(); }

std::vector<RVector> nullspace(const RMatrix& m) {
  RMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector v(a.cols());
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RVector> span_basis(const std::vector<RVector>& vectors, std::size_t dim) {
  RMatrix m = RMatrix::from_rows(vectors, dim);
  const std::size_t r = rref(m).size();
  std::vector<RVector> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
  return out;
}

std::size_t span_dim(const std::vector<RVector>& vectors, std::size_t dim) {
  return rank(RMatrix::from_rows(vectors, dim));
}

bool span_contains(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim) {
  std::vector<RVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_dim(both, dim) == span_dim(a, dim);
}

bool same_span(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

RVector unit_vector(std::size_t dim, std::size_t i) {
  RVector v(dim);
  v.at(i) = Rational(1);
  return v;
}

}  // namespace ew
