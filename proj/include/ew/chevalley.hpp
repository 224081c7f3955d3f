#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ew/linalg.hpp"
#include "ew/rootsys.hpp"

namespace ew {

/// Split Lie algebra of a simply-laced root system in a Chevalley basis.
///
/// Basis order: X_beta for the positive roots (in RootSystem order), then
/// X_{-beta} in the same order, then the simple coroots H_1..H_r.
///
/// Pinning: X_{+-beta} = +-E_{+-beta}, where the E's are Kac's basis built
/// from the bimultiplicative sign eps(alpha_i, alpha_j) = -1 when i == j or
/// (i < j and a_ij = -1), +1 otherwise, with [E_a, E_b] = eps(a,b) E_{a+b}
/// and [E_a, E_{-a}] = -a. In the X basis [X_a, X_{-a}] = a^vee, and the
/// invariant form has (X_a, X_{-a}) = 1, (H_i, H_j) = a_ij.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystemPtr rs);

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& root_system() const { return rs_; }
  int dim() const { return dim_; }
  int num_roots() const { return 2 * npos_; }

  /// Basis index of X_beta; throws ValidationError if beta is not a root.
  int root_index(const RootVec& beta) const;
  /// Root of a root-vector basis index.
  const RootVec& root_of(int index) const { return all_roots_.at(index); }
  bool is_cartan(int index) const { return index >= 2 * npos_; }
  int cartan_index(int node) const;

  /// [b_i, b_j] as (index, coefficient) pairs.
  const std::vector<std::pair<int, int>>& bracket_basis(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }
  /// N with [X_a, X_b] = N X_{a+b}; 0 when a+b is not a root.
  int structure_constant(const RootVec& a, const RootVec& b) const;

  RVector bracket(const RVector& x, const RVector& y) const;
  /// Matrix of ad(x): column j is [x, b_j].
  RMatrix ad(const RVector& x) const;
  Rational form(const RVector& x, const RVector& y) const;

  RVector basis_vector(int i) const { return unit_vector(dim_, i); }
  /// Coroot sum_i c_i H_i of a root sum_i c_i alpha_i.
  RVector coroot(const RootVec& beta) const;

 private:
  RootSystemPtr rs_;
  int npos_ = 0, dim_ = 0;
  std::vector<RootVec> all_roots_;
  std::map<RootVec, int> index_;
  std::vector<std::vector<std::pair<int, int>>> table_;
};

using ChevalleyPtr = std::shared_ptr<const ChevalleyAlgebra>;
ChevalleyPtr make_chevalley(const CartanType& type);

}  // namespace ew
