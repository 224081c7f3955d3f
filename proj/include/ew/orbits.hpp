#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ew/chevalley.hpp"

namespace ew {

// Partitions ------------------------------------------------------------------

using Partition = std::vector<int>;

/// Non-increasing, positive parts. Accepts "3,1,1", "3 1 1", "[3,1^5]" and,
/// when every part is a single digit, "31111111".
Partition parse_partition(std::string_view text);
/// "[3,1^7]"
std::string partition_str(const Partition& p);
Partition dual_partition(const Partition& p);
/// a <= b in the dominance order (partial sums), same total.
bool dominance_leq(const Partition& a, const Partition& b);
/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
/// Even parts have even multiplicity (orthogonal nilpotent orbits).
bool is_orthogonal_partition(const Partition& p);
bool is_very_even(const Partition& p);

// Nilpotent orbits ----------------------------------------------------------------

/// One complex nilpotent orbit. Type A_n uses partitions of n+1 (sl_{n+1},
/// Jordan type of the natural representation); type D_n partitions of 2n
/// (so_{2n}), very-even partitions split into classes I and II; type E uses
/// Bala-Carter labels from a built-in table.
struct NilpotentOrbit {
  CartanType type;
  std::string label;
  Partition partition;
  /// 0 unless the partition is very even: 1 = class I, 2 = class II.
  int very_even_class = 0;
  /// Recorded for the zero, minimal and next-to-minimal orbits and all of
  /// type A; empty otherwise.
  std::string bala_carter;
  int dim = 0;
  bool zero = false;
  bool minimal = false;
  bool next_to_minimal = false;
  /// Simple roots whose negative root vectors sum to an element of the
  /// orbit (regular nilpotent of that Levi). Empty when none is recorded.
  std::vector<int> representative_nodes;
  /// Indices (into the catalog) of the orbits this one covers.
  std::vector<std::size_t> covers;
};

/// Full catalog for A and D; zero through next-to-minimal plus the first
/// orbits above them for E. Sorted by dimension, then label.
std::vector<NilpotentOrbit> orbit_catalog(const CartanType& type);

/// closure[i][j]: orbit i lies in the closure of orbit j.
std::vector<std::vector<bool>> closure_order(const std::vector<NilpotentOrbit>& catalog);

/// Lookup by partition (with optional class for very even) or by label or
/// Bala-Carter string. Throws ValidationError when absent or ambiguous.
const NilpotentOrbit& find_orbit(const std::vector<NilpotentOrbit>& catalog, std::string_view key);

/// dim g - dim g_f, computed in the Chevalley algebra.
int orbit_dimension_of(const ChevalleyAlgebra& g, const RVector& f);
/// sum over nodes of X_{-alpha_node}.
RVector nilpotent_from_nodes(const ChevalleyAlgebra& g, const std::vector<int>& nodes);

// Whittaker pairs -------------------------------------------------------------

/// A root with its nonzero character charge.
struct RootCharge {
  RootVec root;
  Rational charge;
};

/// (S, phi) with S in the Cartan, given by alpha_i(S), and phi paired with
/// f_phi = sum charge * X_root through the invariant form.
struct WhittakerPair {
  std::vector<Rational> s_values;
  std::vector<RootCharge> phi;

  /// Throws ValidationError unless every root in phi has beta(S) = -2 and
  /// all charges are nonzero.
  void validate(const RootSystem& rs) const;
};

/// beta(S) for a root given in simple-root coordinates.
Rational root_value(const RootVec& beta, const std::vector<Rational>& s_values);

/// Basis-index sets of the ad(S) eigenspaces; the Cartan sits in 0.
struct GradedSubspace {
  std::map<Rational, std::vector<int>> spaces;
  std::size_t total_dim() const;
  std::size_t dim(const Rational& eigenvalue) const;
};

GradedSubspace grade_by(const ChevalleyAlgebra& g, const std::vector<Rational>& s_values);

RVector f_phi(const ChevalleyAlgebra& g, const std::vector<RootCharge>& phi);
/// g_phi = {X : phi([X, .]) = 0} = centralizer of f_phi.
std::vector<RVector> stabilizer(const ChevalleyAlgebra& g, const std::vector<RootCharge>& phi);

/// n_{S,phi} = g^S_{>1} + (g^S_1 intersect g_phi).
std::vector<RVector> n_S_phi(const ChevalleyAlgebra& g, const WhittakerPair& pair);
/// Radical of omega_phi(X, Y) = phi([X, Y]) on u_S = g^S_{>=1}.
std::vector<RVector> omega_radical(const ChevalleyAlgebra& g, const WhittakerPair& pair);
/// (H, phi) dominates (S, phi): g_phi intersect g^H_{>=1} lies in g^{S-H}_{>=0}.
/// Throws ValidationError when the two phi differ.
bool dominates(const ChevalleyAlgebra& g, const WhittakerPair& h_pair, const WhittakerPair& s_pair);

/// sl_2-triple built on pairwise orthogonal positive roots beta with charges
/// c: h = sum beta^vee, f = sum c X_{-beta}, e = sum (1/c) X_beta. An empty
/// support gives the zero triple.
struct NeutralPair {
  WhittakerPair pair;
  RVector e, h, f;
};

NeutralPair neutral_pair_for(const ChevalleyAlgebra& g, const std::vector<RootCharge>& support);
/// Convenience: simple roots by node with charges.
NeutralPair neutral_pair_for_nodes(const ChevalleyAlgebra& g, const std::map<int, Rational>& node_charges);

struct Sl2Check {
  bool he = false, hf = false, ef = false;
  bool ok() const { return he && hf && ef; }
};
Sl2Check check_sl2(const ChevalleyAlgebra& g, const NeutralPair& p);

struct IsotropicReport {
  std::size_t n_dim = 0;
  std::size_t g1_dim = 0;
  std::size_t i_max = 0;
  int orbit_dim = 0;
  bool holds = false;
};

/// dim I_max = dim n_{S,phi} + dim g^S_1 / 2 against orbit dim / 2.
IsotropicReport isotropic_dimension_check(const ChevalleyAlgebra& g, const NeutralPair& p, const NilpotentOrbit& orbit);

}  // namespace ew
