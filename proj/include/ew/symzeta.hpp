#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ew/affine.hpp"
#include "ew/rational.hpp"

namespace ew {

/// Order of the completed zeta function at a real point: -1 at the simple
/// poles 0 and 1, 0 everywhere else on the real line.
int xi_order_at(const Rational& x);

/// Representative of {x, 1-x} with positive slope, or zero slope and
/// intercept >= 1/2.
AffineArg canonical_xi_arg(const AffineArg& x);

/// Finite product of xi(arg)^exponent. Zero exponents are never stored.
class XiProduct {
 public:
  using Map = std::map<AffineArg, int>;

  XiProduct() = default;
  /// xi(arg)^exponent.
  static XiProduct factor(const AffineArg& arg, int exponent = 1);
  /// xi(x) / xi(x + 1), the rank-one intertwiner factor.
  static XiProduct rank_one_ratio(const AffineArg& x);

  const Map& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  /// Multiplies in xi(arg)^exponent without normalizing the argument.
  void multiply(const AffineArg& arg, int exponent);
  XiProduct& operator*=(const XiProduct& other);
  friend XiProduct operator*(XiProduct a, const XiProduct& b) { return a *= b; }
  XiProduct inverse() const;

  /// Net order of vanishing at s0 (denominator poles count as zeros).
  int order_at(const Rational& s0) const;
  /// Same, counting only arguments that do not depend on s.
  int generic_order() const;

  friend bool operator==(const XiProduct&, const XiProduct&) = default;
  friend auto operator<=>(const XiProduct& a, const XiProduct& b) { return a.factors_ <=> b.factors_; }

 private:
  Map factors_;
};

/// Applies xi(x) = xi(1-x) to every argument and merges exponents.
XiProduct canonicalize(const XiProduct& p);

/// Building block attached to one connected component of the character
/// support: an A1 block B_m(s') or an A2 block B_{m1,m2}(s1, s2).
struct BFactor {
  /// Support nodes in increasing order (one for A1, two for A2).
  std::vector<int> nodes;
  /// Charge slots, aligned with nodes.
  std::vector<std::string> charges;
  /// Parameters, aligned with nodes.
  std::vector<AffineArg> params;

  bool is_a2() const { return nodes.size() == 2; }
  /// Arguments of the xi-prefactor in the block's reciprocal normalization:
  /// {2s'} for A1 and {2s1, 2s2, 2s1+2s2-1} for A2.
  std::vector<AffineArg> prefactor_args() const;
  int order_at(const Rational& s0) const;
  int generic_order() const;

  friend bool operator==(const BFactor&, const BFactor&) = default;
  friend auto operator<=>(const BFactor&, const BFactor&) = default;
};

/// One summand: an intertwiner product times building blocks.
struct TermExpr {
  std::string coset_id;
  XiProduct xi;
  std::vector<BFactor> bfactors;

  int order_at(const Rational& s0) const;
  int generic_order() const;
};

int term_order_at(const TermExpr& t, const Rational& s0);

/// Reflects each building block into its canonical chamber using the
/// block's own functional equation, absorbing the intertwiner factors into
/// the xi product, then canonicalizes the xi product. The represented
/// function is unchanged.
TermExpr canonicalize(const TermExpr& t);

/// Canonical ordering key (xi product, then building blocks). Coset ids
/// are ignored.
bool term_less(const TermExpr& a, const TermExpr& b);
bool term_equal(const TermExpr& a, const TermExpr& b);

/// Sum of terms.
struct CoeffExpr {
  std::vector<TermExpr> terms;

  bool is_zero() const { return terms.empty(); }
};

/// Canonicalizes every term and sorts by the canonical key.
CoeffExpr canonicalize(const CoeffExpr& c);

/// Term-by-term equality after canonicalization (as multisets; coset ids
/// are not compared).
bool symbolically_equal(const CoeffExpr& a, const CoeffExpr& b);

struct PoleReport {
  Rational s0;
  std::vector<std::string> coset_ids;
  std::vector<int> orders;
  std::string describe() const;
};

/// Drops terms with positive order at s0. A surviving term with negative
/// order turns the whole result into a pole report.
std::variant<CoeffExpr, PoleReport> evaluate_symbolic(const CoeffExpr& c, const Rational& s0);

/// lim_{s->s0} p(s) when p has order 0 at s0, its singular factors hit 0 or
/// 1 with nonzero slope, and the regular factors cancel under x <-> 1-x.
/// Near those points xi(a) ~ -1/(a's h) resp. 1/(a's h), so the limit is
/// rational. Anything else gives nullopt.
std::optional<Rational> rational_limit(const XiProduct& p, const Rational& s0);

/// Order-zero terms whose building blocks take identical values at s0 and
/// whose prefactors differ by a rational limit, summed: the group's value is
/// weight * lead(s0).
struct TermGroup {
  TermExpr lead;
  Rational weight{1};
  std::size_t members = 1;
};

/// Groups the terms of c (all of order 0 at s0) and drops groups whose
/// weights cancel to zero.
std::vector<TermGroup> merge_at(const CoeffExpr& c, const Rational& s0);

// Rendering -----------------------------------------------------------------

/// "xi(2s-4)^2/(xi(2s)*xi(2s-3)) * B[4:m](5/2-s) * B[5:n](5/2-s)"; the
/// output is accepted by parse_term.
std::string to_text(const XiProduct& p);
std::string to_text(const BFactor& b);
std::string to_text(const TermExpr& t);
std::string to_text(const CoeffExpr& c);

std::string to_latex(const XiProduct& p);
std::string to_latex(const BFactor& b);
std::string to_latex(const TermExpr& t);
std::string to_latex(const CoeffExpr& c);

/// Parses the text form. Terms are separated by '+' at bracket depth 0;
/// factors by '*' or '/'; a parenthesized group after '/' is inverted as a
/// whole. Factors: `xi(arg)`, `xi(arg)^k`, `B[4:m](5/2-s)`,
/// `B[7:m,8:n](6-s,19/2-s)`, or the literal `1`.
TermExpr parse_term(std::string_view text);
CoeffExpr parse_coeff(std::string_view text);

}  // namespace ew
