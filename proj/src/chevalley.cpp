#include "ew/chevalley.hpp"

#include "ew/errors.hpp"

namespace ew {
namespace {

int sign_of(const RootSystem& rs, const RootVec& r) { return rs.is_positive(r) ? 1 : -1; }

// eps(a, b) = (-1)^(sum_i a_i b_i + sum_{i<j, a_ij=-1} a_i b_j)
int kac_sign(const RootSystem& rs, const RootVec& a, const RootVec& b) {
  const auto& C = rs.cartan_matrix();
  long parity = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    parity += static_cast<long>(a[i]) * b[i];
    for (int j = i + 1; j < rs.rank(); ++j)
      if (C[i][j] == -1) parity += static_cast<long>(a[i]) * b[j];
  }
  return (parity % 2 == 0) ? 1 : -1;
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RootVec negate(RootVec a) {
  for (auto& x : a) x = -x;
  return a;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystemPtr rs) : rs_(std::move(rs)) {
  const auto& R = *rs_;
  const int r = R.rank();
  npos_ = static_cast<int>(R.positive_roots().size());
  dim_ = 2 * npos_ + r;
  for (const auto& b : R.positive_roots()) all_roots_.push_back(b);
  for (const auto& b : R.positive_roots()) all_roots_.push_back(negate(b));
  for (int i = 0; i < 2 * npos_; ++i) index_[all_roots_[i]] = i;

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  const auto& C = R.cartan_matrix();
  for (int i = 0; i < 2 * npos_; ++i) {
    const RootVec& a = all_roots_[i];
    // <a, alpha_k> for each k
    std::vector<int> values(r, 0);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) values[k] += a[l] * C[l][k];
    for (int k = 0; k < r; ++k) {
      if (values[k] == 0) continue;
      table_[static_cast<std::size_t>(cartan_index(k + 1)) * dim_ + i] = {{i, values[k]}};
      table_[static_cast<std::size_t>(i) * dim_ + cartan_index(k + 1)] = {{i, -values[k]}};
    }
    for (int j = 0; j < 2 * npos_; ++j) {
      const RootVec& b = all_roots_[j];
      RootVec c = add(a, b);
      auto& slot = table_[static_cast<std::size_t>(i) * dim_ + j];
      bool zero = true;
      for (int x : c) zero = zero && x == 0;
      if (zero) {
        for (int k = 0; k < r; ++k)
          if (a[k] != 0) slot.emplace_back(cartan_index(k + 1), a[k]);
        continue;
      }
      auto it = index_.find(c);
      if (it == index_.end()) continue;
      const int n = sign_of(R, a) * sign_of(R, b) * sign_of(R, c) * kac_sign(R, a, b);
      slot.emplace_back(it->second, n);
    }
  }
}

int ChevalleyAlgebra::root_index(const RootVec& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) throw ValidationError("not a root of " + rs_->type().name());
  return it->second;
}

int ChevalleyAlgebra::cartan_index(int node) const {
  rs_->check_node(node);
  return 2 * npos_ + node - 1;
}

int ChevalleyAlgebra::structure_constant(const RootVec& a, const RootVec& b) const {
  const auto& entries = bracket_basis(root_index(a), root_index(b));
  if (entries.size() != 1 || is_cartan(entries[0].first)) return 0;
  return entries[0].second;
}

RVector ChevalleyAlgebra::bracket(const RVector& x, const RVector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw ValidationError("element has wrong dimension");
  RVector z(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [k, c] : bracket_basis(i, j)) z[k] += xy * Rational(c);
    }
  }
  return z;
}

RMatrix ChevalleyAlgebra::ad(const RVector& x) const {
  if (static_cast<int>(x.size()) != dim_) throw ValidationError("element has wrong dimension");
  RMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) += x[i] * Rational(c);
  }
  return m;
}

Rational ChevalleyAlgebra::form(const RVector& x, const RVector& y) const {
  Rational v;
  for (int i = 0; i < npos_; ++i) v += x[i] * y[i + npos_] + x[i + npos_] * y[i];
  const auto& C = rs_->cartan_matrix();
  const int r = rs_->rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (C[i][j] != 0) v += x[2 * npos_ + i] * y[2 * npos_ + j] * Rational(C[i][j]);
  return v;
}

RVector ChevalleyAlgebra::coroot(const RootVec& beta) const {
  if (!rs_->is_root(beta)) throw ValidationError("not a root of " + rs_->type().name());
  RVector h(dim_);
  for (int k = 0; k < rs_->rank(); ++k) h[2 * npos_ + k] = Rational(beta[k]);
  return h;
}

ChevalleyPtr make_chevalley(const CartanType& type) {
  return std::make_shared<const ChevalleyAlgebra>(make_root_system(type));
}

}  // namespace ew
