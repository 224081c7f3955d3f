#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ew/affine.hpp"
#include "ew/rational.hpp"

namespace ew {

enum class Series { A, D, E };

/// Cartan type of a split simply-laced group, e.g. A5, D6, E8.
struct CartanType {
  Series series = Series::A;
  int rank = 1;

  /// "A5", "D6", "E8".
  std::string name() const;
  /// Accepts "E8", "e8", "D_5", "A2".
  static CartanType parse(std::string_view text);

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Coordinates in the simple-root basis.
using RootVec = std::vector<int>;

/// Rational coordinates in the fundamental-weight basis.
struct WeightVector {
  std::vector<Rational> coords;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Weight whose fundamental-weight coordinates are affine in s.
struct AffineWeight {
  std::vector<AffineArg> coords;
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Root data for A_n (n>=1), D_n (n>=4), E6, E7, E8 in Bourbaki labelling,
/// with the invariant form normalized so that every root has squared length 2.
///
/// Nodes are addressed by their Bourbaki label 1..rank in every public
/// function; vectors are indexed by label-1.
///
///   A_n: 1-2-...-n
///   D_n: 1-2-...-(n-2), with n-1 and n both attached to n-2
///   E_n: 1-3-4-5-...-n, with 2 attached to 4
///
/// Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(Series series, int rank);
  static RootSystem build(const CartanType& type) { return build(type.series, type.rank); }

  const CartanType& type() const { return type_; }
  Series series() const { return type_.series; }
  int rank() const { return type_.rank; }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<RootVec>& simple_roots() const { return simple_; }
  /// Sorted by height, ties broken lexicographically.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  /// Fundamental weights expressed in the simple-root basis (rows of C^-1).
  const std::vector<std::vector<Rational>>& fundamental_weights() const { return fundamental_; }
  /// rho in the fundamental-weight basis: (1, ..., 1).
  WeightVector weyl_vector() const;
  /// rho in the simple-root basis.
  const std::vector<Rational>& weyl_vector_root_basis() const { return rho_root_basis_; }

  /// Index into positive_roots(), or -1 if r is not a positive root.
  int positive_index(const RootVec& r) const;
  bool is_root(const RootVec& r) const;
  bool is_positive(const RootVec& r) const;
  RootVec highest_root() const { return positive_.back(); }
  int height(const RootVec& r) const;

  /// Fundamental-weight coordinates <r|alpha_j> of a root-lattice vector.
  std::vector<int> root_to_weight(const RootVec& r) const;
  /// Simple-root coordinates of a weight (via the inverse Cartan matrix).
  std::vector<Rational> weight_to_root_basis(const WeightVector& w) const;

  /// Simple reflection s_i (1-based label) on a root-lattice vector.
  RootVec reflect(int node, const RootVec& r) const;

  /// Order of the Weyl group.
  std::uint64_t weyl_group_order() const;

  /// Nodes adjacent to `node` in the Dynkin diagram.
  std::vector<int> neighbours(int node) const;

  void check_node(int node) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<RootVec> simple_;
  std::vector<RootVec> positive_;
  std::map<RootVec, int> positive_lookup_;
  std::vector<std::vector<Rational>> fundamental_;
  std::vector<Rational> rho_root_basis_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr make_root_system(Series series, int rank);
RootSystemPtr make_root_system(const CartanType& type);

/// Normalized invariant form. Roots are in the simple-root basis, weights in
/// the fundamental-weight basis; mismatched lengths throw ValidationError.
int pairing(const RootSystem& rs, const RootVec& a, const RootVec& b);
Rational pairing(const RootSystem& rs, const RootVec& root, const WeightVector& w);
Rational pairing(const RootSystem& rs, const WeightVector& v, const WeightVector& w);
AffineArg pairing(const RootSystem& rs, const RootVec& root, const AffineWeight& w);

/// Lambda_i as a weight vector.
WeightVector fundamental_weight(const RootSystem& rs, int node);

/// The degenerate weight 2s*Lambda_node - rho.
AffineWeight eisenstein_weight(const RootSystem& rs, int node);

}  // namespace ew
