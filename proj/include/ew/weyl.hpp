#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ew/rootsys.hpp"

namespace ew {

/// A Weyl group element: a reduced word in simple reflections (Bourbaki
/// labels) together with its integer action on fundamental-weight
/// coordinates. Equality compares the action, never the word.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int node);
  /// Any word; the stored word is re-derived and reduced.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);
  static WeylElement from_matrix(const RootSystem& rs, IntMatrix action);

  /// w = s_{word[0]} s_{word[1]} ... (leftmost letter acts last).
  const std::vector<int>& word() const { return word_; }
  const IntMatrix& action() const { return action_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  std::string word_string() const;

  WeightVector act(const WeightVector& v) const;
  AffineWeight act(const AffineWeight& v) const;
  std::vector<int> act(const std::vector<int>& v) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  std::vector<int> word_;
  IntMatrix action_;
};

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// w applied to a root-lattice vector.
RootVec act_on_root(const RootSystem& rs, const WeylElement& w, const RootVec& r);

WeylElement longest_element(const RootSystem& rs);
/// Longest element of the parabolic subgroup generated by `nodes`.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& nodes);

/// {alpha > 0 : w(alpha) < 0}, in positive_roots() order.
std::vector<RootVec> inversion_set(const RootSystem& rs, const WeylElement& w);

/// The W-orbit of an integral dominant weight (BFS order, reflecting downwards).
std::vector<std::vector<int>> weyl_orbit(const RootSystem& rs, const std::vector<int>& dominant);

/// Order of the parabolic subgroup W_J.
std::uint64_t parabolic_order(const RootSystem& rs, const std::vector<int>& nodes);

enum class CosetStrategy { Exhaustive, LeviPruned };

std::string to_string(CosetStrategy s);
CosetStrategy parse_strategy(std::string_view text);

/// Minimal-length representatives w of cosets w W' (W' generated by the
/// support nodes). Each rep satisfies w(alpha) > 0 for alpha in the support.
///
/// The coset key is w(nu) for nu = sum of the fundamental weights outside the
/// support; nu has stabilizer exactly W', so keys identify cosets
/// independently of the strategy that produced them. Reps are ordered by
/// (length, key).
class CosetTable {
 public:
  CosetTable(RootSystemPtr parent, std::vector<int> support, CosetStrategy strategy, std::vector<int> levi);

  const RootSystemPtr& parent() const { return parent_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<int>& levi() const { return levi_; }
  CosetStrategy strategy() const { return strategy_; }

  std::size_t size() const { return offsets_.size(); }
  std::span<const std::uint8_t> word(std::size_t i) const;
  std::vector<int> word_vector(std::size_t i) const;
  WeylElement element(std::size_t i) const;
  /// w(nu), fundamental-weight coordinates.
  std::vector<int> key(std::size_t i) const;
  /// w(rho), fundamental-weight coordinates.
  std::vector<int> rho_image(std::size_t i) const;

  /// Appends a representative. Callers must finish with sort().
  void add(std::span<const std::uint8_t> word, std::span<const int> key, std::span<const int> rho_image);
  void sort();

 private:
  RootSystemPtr parent_;
  std::vector<int> support_;
  CosetStrategy strategy_;
  std::vector<int> levi_;
  std::vector<std::uint8_t> letters_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::int8_t> keys_;
  std::vector<std::int8_t> rho_images_;
};

/// Weight nu = sum of Lambda_j over nodes j outside `support`.
std::vector<int> coset_base_weight(const RootSystem& rs, const std::vector<int>& support);

struct ExhaustiveOptions {
  /// Largest |W| accepted; the default admits everything through E7.
  std::uint64_t max_group_order = 2903040;
};

/// Enumerates all of W/W'. Throws InfeasibleStrategy when |W| exceeds the cap.
CosetTable coset_reps_exhaustive(const RootSystemPtr& rs, const std::vector<int>& support,
                                 const ExhaustiveOptions& opts = {});

/// Minimal double-coset representatives for W_levi \ W / W', where `levi`
/// must be all nodes but one (the inducing node i*). Enumerated by BFS over
/// the orbit of Lambda_{i*}: an orbit weight mu = w^{-1} Lambda_{i*} indexes
/// the candidate, the BFS path gives the reduced word, and mu is moved into
/// the W'-dominant chamber to pick one representative per right W'-coset.
CosetTable coset_reps_levi_pruned(const RootSystemPtr& rs, const std::vector<int>& levi,
                                  const std::vector<int>& support);

/// The single node missing from `levi`; throws ValidationError otherwise.
int inducing_node_of(const RootSystem& rs, const std::vector<int>& levi);

/// Normalizes a node list: sorted, unique, range-checked.
std::vector<int> normalize_nodes(const RootSystem& rs, std::vector<int> nodes);

}  // namespace ew
