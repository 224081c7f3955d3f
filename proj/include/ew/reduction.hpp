#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ew/rootsys.hpp"
#include "ew/symzeta.hpp"
#include "ew/weyl.hpp"

namespace ew {

/// Simple roots carrying a nonzero character charge, each with a symbolic
/// slot name ("m", "n", ...) that numeric evaluation later binds.
struct CharacterSupport {
  std::map<int, std::string> charges;

  /// "4:m,5:n", or bare "4,5" (slots then default to m, n, p, q, ...).
  static CharacterSupport parse(std::string_view text);
  static CharacterSupport from_nodes(const std::vector<int>& nodes);

  std::vector<int> nodes() const;
  std::string str() const;
};

/// Connected components of the support subdiagram, nodes increasing within
/// each. Throws ValidationError unless every component is A1 or A2.
std::vector<std::vector<int>> support_components(const RootSystem& rs, const CharacterSupport& support);

struct EisensteinSpec {
  RootSystemPtr rs;
  AffineWeight lambda;
  /// Set when lambda = 2s Lambda_{i*} - rho.
  std::optional<int> inducing_node;

  static EisensteinSpec degenerate(RootSystemPtr rs, int node);
  /// Nodes other than the inducing node; requires inducing_node.
  std::vector<int> levi() const;
};

struct ReductionOptions {
  CosetStrategy strategy = CosetStrategy::LeviPruned;
  ExhaustiveOptions exhaustive;
  /// Worker threads for per-coset term construction (0 or 1 = inline).
  unsigned threads = 1;
};

/// prod over alpha > 0 with w^{-1} alpha < 0 of xi(<alpha|lambda>)/xi(<alpha|lambda>+1),
/// canonicalized.
XiProduct intertwiner(const RootSystem& rs, const WeylElement& w, const AffineWeight& lambda);

/// s'_alpha = (<w^{-1} lambda | alpha> + 1)/2 for each support node.
std::map<int, AffineArg> restricted_parameters(const RootSystem& rs, const WeylElement& w, const AffineWeight& lambda,
                                               const std::vector<int>& support);

struct ReductionResult {
  CoeffExpr expr;
  std::size_t candidates = 0;
  /// Dropped because a restricted parameter is the constant 0 or 1/2.
  std::size_t dropped_nongeneric = 0;
  /// Dropped because constant xi arguments force a zero.
  std::size_t dropped_order = 0;
};

/// Coset table for an Eisenstein series and character support under the requested strategy.
CosetTable coset_table_for(const EisensteinSpec& spec, const std::vector<int>& support, const ReductionOptions& opts);

/// Runs the reduction over a prepared coset table. Terms come out in
/// canonical form and canonical order.
ReductionResult reduce(const EisensteinSpec& spec, const CharacterSupport& support, const CosetTable& table,
                       unsigned threads = 1);

CoeffExpr degenerate_whittaker(const EisensteinSpec& spec, const CharacterSupport& support,
                               const ReductionOptions& opts = {});

enum class VerdictKind { Eulerian, Zero, NonEulerian, Pole };

struct EulerianityVerdict {
  VerdictKind kind = VerdictKind::Zero;
  /// Surviving groups after exact merging at s0 (terms at generic s).
  std::size_t surviving = 0;
  /// Order-zero terms absorbed into another term or cancelled outright.
  std::size_t merged = 0;
  std::optional<TermExpr> term;
  /// The single survivor's value is weight * term(s0).
  Rational weight{1};
  std::optional<PoleReport> pole;

  std::string str() const;
};

std::string to_string(VerdictKind k);

/// Classifies by the number of surviving terms at generic s, or at s0 after
/// merging terms that provably combine there (see merge_at).
EulerianityVerdict eulerianity_report(const CoeffExpr& c, const std::optional<Rational>& s0);

/// Constant term along the Borel at the identity: one intertwiner per
/// minimal coset of W_levi \ W. Requires an inducing node.
CoeffExpr constant_term(const EisensteinSpec& spec, const ReductionOptions& opts = {});

}  // namespace ew
