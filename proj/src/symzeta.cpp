#include "ew/symzeta.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ew {
namespace {

const Rational kHalf(1, 2);

bool is_pole_point(const Rational& x) { return x == Rational(0) || x == Rational(1); }

// Display order: larger slope first, then larger intercept.
std::vector<std::pair<AffineArg, int>> display_order(const XiProduct& p, int sign) {
  std::vector<std::pair<AffineArg, int>> out;
  for (const auto& [arg, e] : p.factors())
    if ((e > 0) == (sign > 0)) out.emplace_back(arg, sign > 0 ? e : -e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.slope != b.first.slope) return a.first.slope > b.first.slope;
    return a.first.intercept > b.first.intercept;
  });
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string xi_text(const AffineArg& a, int e) {
  std::string s = "xi(" + a.str() + ")";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string xi_latex(const AffineArg& a, int e) {
  std::string s = "\\xi(" + a.latex() + ")";
  if (e != 1) s += "^{" + std::to_string(e) + "}";
  return s;
}

// Reflection of an A1 or A2 block through one simple reflection of its own
// Weyl group. x holds <lambda'|alpha> for the block's nodes.
void orient_block(BFactor& b, XiProduct& xi) {
  std::vector<AffineArg> x;
  for (const auto& p : b.params) x.push_back(Rational(2) * p - Rational(1));
  for (int guard = 0; guard < 16; ++guard) {
    std::size_t i = 0;
    while (i < x.size() && x[i].eventual_sign() <= 0) ++i;
    if (i == x.size()) break;
    xi *= XiProduct::rank_one_ratio(x[i]);
    const AffineArg xi_old = x[i];
    x[i] = -xi_old;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) x[j] = x[j] + xi_old;  // adjacent nodes in an A2 block
  }
  for (std::size_t i = 0; i < x.size(); ++i) b.params[i] = kHalf * (x[i] + Rational(1));
}

// Cursor over the text grammar.
class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= t_.size();
  }
  char peek() {
    skip();
    return i_ < t_.size() ? t_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip();
    if (t_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse expression at offset " + std::to_string(i_) + ": " + why + " in '" +
                                std::string(t_) + "'");
  }
  // Text up to the matching close bracket, consuming it.
  std::string until_close(char open, char close) {
    int depth = 1;
    std::size_t start = i_;
    while (i_ < t_.size()) {
      if (t_[i_] == open) ++depth;
      if (t_[i_] == close && --depth == 0) {
        std::string s(t_.substr(start, i_ - start));
        ++i_;
        return s;
      }
      ++i_;
    }
    fail("unbalanced brackets");
  }
  int integer() {
    skip();
    bool neg = false;
    if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+')) neg = t_[i_++] == '-';
    std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    int v = std::stoi(std::string(t_.substr(start, i_ - start)));
    return neg ? -v : v;
  }

  // factor := xi(arg)[^k] | B[...](...) | '(' product ')' | '1'
  void factor(TermExpr& term, int sign) {
    if (eat_word("xi")) {
      expect('(');
      AffineArg a = AffineArg::parse(until_close('(', ')'));
      int e = 1;
      if (eat('^')) {
        bool braced = eat('{');
        e = integer();
        if (braced) expect('}');
      }
      term.xi.multiply(a, sign * e);
      return;
    }
    if (eat('B')) {
      if (sign < 0) fail("building blocks cannot appear in a denominator");
      expect('[');
      BFactor b;
      std::stringstream slots(until_close('[', ']'));
      std::string item;
      while (std::getline(slots, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) fail("slot must read node:charge");
        b.nodes.push_back(std::stoi(item.substr(0, colon)));
        std::string charge = item.substr(colon + 1);
        charge.erase(std::remove_if(charge.begin(), charge.end(), ::isspace), charge.end());
        b.charges.push_back(charge);
      }
      expect('(');
      std::stringstream params(until_close('(', ')'));
      while (std::getline(params, item, ',')) b.params.push_back(AffineArg::parse(item));
      if (b.params.size() != b.nodes.size() || b.nodes.empty() || b.nodes.size() > 2)
        fail("building block needs one or two node:charge slots with matching parameters");
      term.bfactors.push_back(std::move(b));
      return;
    }
    if (eat('(')) {
      product(term, sign);
      expect(')');
      return;
    }
    if (eat('1')) return;
    fail("unexpected token");
  }

  void product(TermExpr& term, int sign) {
    factor(term, sign);
    while (true) {
      if (eat('*')) {
        factor(term, sign);
      } else if (eat('/')) {
        factor(term, -sign);
      } else {
        break;
      }
    }
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

// Splits at '+' signs outside any bracket.
std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == '+' && depth == 0) {
      out.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(text.substr(start));
  return out;
}

}  // namespace

int xi_order_at(const Rational& x) { return is_pole_point(x) ? -1 : 0; }

AffineArg canonical_xi_arg(const AffineArg& x) {
  const int sl = x.slope.sign();
  if (sl > 0) return x;
  if (sl == 0 && x.intercept >= kHalf) return x;
  return AffineArg{-x.slope, Rational(1) - x.intercept};
}

XiProduct XiProduct::factor(const AffineArg& arg, int exponent) {
  XiProduct p;
  p.multiply(arg, exponent);
  return p;
}

XiProduct XiProduct::rank_one_ratio(const AffineArg& x) {
  XiProduct p;
  p.multiply(x, 1);
  p.multiply(x + Rational(1), -1);
  return p;
}

void XiProduct::multiply(const AffineArg& arg, int exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = factors_.emplace(arg, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

XiProduct& XiProduct::operator*=(const XiProduct& other) {
  for (const auto& [arg, e] : other.factors_) multiply(arg, e);
  return *this;
}

XiProduct XiProduct::inverse() const {
  XiProduct p;
  for (const auto& [arg, e] : factors_) p.multiply(arg, -e);
  return p;
}

int XiProduct::order_at(const Rational& s0) const {
  int order = 0;
  for (const auto& [arg, e] : factors_) order += e * xi_order_at(arg.at(s0));
  return order;
}

int XiProduct::generic_order() const {
  int order = 0;
  for (const auto& [arg, e] : factors_)
    if (arg.is_constant()) order += e * xi_order_at(arg.intercept);
  return order;
}

XiProduct canonicalize(const XiProduct& p) {
  XiProduct out;
  for (const auto& [arg, e] : p.factors()) out.multiply(canonical_xi_arg(arg), e);
  return out;
}

std::vector<AffineArg> BFactor::prefactor_args() const {
  if (!is_a2()) return {Rational(2) * params.at(0)};
  return {Rational(2) * params[0], Rational(2) * params[1], Rational(2) * (params[0] + params[1]) - Rational(1)};
}

int BFactor::order_at(const Rational& s0) const {
  int order = 0;
  for (const auto& a : prefactor_args())
    if (is_pole_point(a.at(s0))) ++order;
  return order;
}

int BFactor::generic_order() const {
  int order = 0;
  for (const auto& a : prefactor_args())
    if (a.is_constant() && is_pole_point(a.intercept)) ++order;
  return order;
}

int TermExpr::order_at(const Rational& s0) const {
  int order = xi.order_at(s0);
  for (const auto& b : bfactors) order += b.order_at(s0);
  return order;
}

int TermExpr::generic_order() const {
  int order = xi.generic_order();
  for (const auto& b : bfactors) order += b.generic_order();
  return order;
}

int term_order_at(const TermExpr& t, const Rational& s0) { return t.order_at(s0); }

TermExpr canonicalize(const TermExpr& t) {
  TermExpr out = t;
  for (auto& b : out.bfactors) orient_block(b, out.xi);
  out.xi = canonicalize(out.xi);
  std::sort(out.bfactors.begin(), out.bfactors.end(),
            [](const BFactor& a, const BFactor& b) { return a.nodes < b.nodes; });
  return out;
}

bool term_less(const TermExpr& a, const TermExpr& b) {
  if (a.xi != b.xi) return a.xi < b.xi;
  return a.bfactors < b.bfactors;
}

bool term_equal(const TermExpr& a, const TermExpr& b) { return a.xi == b.xi && a.bfactors == b.bfactors; }

CoeffExpr canonicalize(const CoeffExpr& c) {
  CoeffExpr out;
  for (const auto& t : c.terms) out.terms.push_back(canonicalize(t));
  std::stable_sort(out.terms.begin(), out.terms.end(), term_less);
  return out;
}

bool symbolically_equal(const CoeffExpr& a, const CoeffExpr& b) {
  CoeffExpr ca = canonicalize(a), cb = canonicalize(b);
  if (ca.terms.size() != cb.terms.size()) return false;
  for (std::size_t i = 0; i < ca.terms.size(); ++i)
    if (!term_equal(ca.terms[i], cb.terms[i])) return false;
  return true;
}

std::string PoleReport::describe() const {
  std::string s = "pole at s = " + s0.str() + " from";
  for (std::size_t i = 0; i < coset_ids.size(); ++i)
    s += " [" + (coset_ids[i].empty() ? std::string("term") : coset_ids[i]) + ", order " + std::to_string(orders[i]) + "]";
  return s;
}

std::variant<CoeffExpr, PoleReport> evaluate_symbolic(const CoeffExpr& c, const Rational& s0) {
  CoeffExpr kept;
  PoleReport report{s0, {}, {}};
  for (const auto& t : c.terms) {
    const int ord = t.order_at(s0);
    if (ord > 0) continue;
    if (ord < 0) {
      report.coset_ids.push_back(t.coset_id);
      report.orders.push_back(ord);
    }
    kept.terms.push_back(t);
  }
  if (!report.coset_ids.empty()) return report;
  return kept;
}

std::optional<Rational> rational_limit(const XiProduct& p, const Rational& s0) {
  if (p.order_at(s0) != 0) return std::nullopt;
  Rational value(1);
  std::map<Rational, int> regular;
  for (const auto& [arg, e] : p.factors()) {
    const Rational x = arg.at(s0);
    if (x.is_zero() || x == Rational(1)) {
      if (arg.slope.is_zero()) return std::nullopt;
      const Rational leading = (x.is_zero() ? Rational(-1) : Rational(1)) / arg.slope;
      for (int k = 0; k < std::abs(e); ++k) value = e > 0 ? value * leading : value / leading;
    } else {
      regular[x < Rational(1, 2) ? Rational(1) - x : x] += e;
    }
  }
  for (const auto& [x, e] : regular)
    if (e != 0) return std::nullopt;
  return value;
}

namespace {

bool blocks_regular_at(const TermExpr& t, const Rational& s0) {
  for (const auto& b : t.bfactors)
    if (b.order_at(s0) != 0) return false;
  return true;
}

bool blocks_agree_at(const TermExpr& a, const TermExpr& b, const Rational& s0) {
  if (a.bfactors.size() != b.bfactors.size()) return false;
  for (std::size_t i = 0; i < a.bfactors.size(); ++i) {
    const auto &x = a.bfactors[i], &y = b.bfactors[i];
    if (x.nodes != y.nodes || x.charges != y.charges || x.params.size() != y.params.size()) return false;
    for (std::size_t k = 0; k < x.params.size(); ++k)
      if (x.params[k].at(s0) != y.params[k].at(s0)) return false;
  }
  return true;
}

}  // namespace

std::vector<TermGroup> merge_at(const CoeffExpr& c, const Rational& s0) {
  std::vector<TermGroup> groups;
  for (const auto& t : c.terms) {
    bool placed = false;
    if (t.order_at(s0) == 0 && blocks_regular_at(t, s0)) {
      for (auto& g : groups) {
        if (!blocks_regular_at(g.lead, s0) || !blocks_agree_at(g.lead, t, s0)) continue;
        auto q = rational_limit(t.xi * g.lead.xi.inverse(), s0);
        if (!q) continue;
        g.weight += *q;
        ++g.members;
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back(TermGroup{t, Rational(1), 1});
  }
  std::erase_if(groups, [](const TermGroup& g) { return g.weight.is_zero(); });
  return groups;
}

// Rendering -----------------------------------------------------------------

std::string to_text(const XiProduct& p) {
  std::vector<std::string> num, den;
  for (const auto& [a, e] : display_order(p, +1)) num.push_back(xi_text(a, e));
  for (const auto& [a, e] : display_order(p, -1)) den.push_back(xi_text(a, e));
  std::string s = num.empty() ? "1" : join(num, "*");
  if (den.size() == 1) s += "/" + den[0];
  if (den.size() > 1) s += "/(" + join(den, "*") + ")";
  return s;
}

std::string to_text(const BFactor& b) {
  std::vector<std::string> slots, params;
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    slots.push_back(std::to_string(b.nodes[i]) + ":" + b.charges[i]);
    params.push_back(b.params[i].str());
  }
  return "B[" + join(slots, ",") + "](" + join(params, ",") + ")";
}

std::string to_text(const TermExpr& t) {
  std::vector<std::string> parts;
  if (!t.xi.is_one() || t.bfactors.empty()) parts.push_back(to_text(t.xi));
  for (const auto& b : t.bfactors) parts.push_back(to_text(b));
  return join(parts, " * ");
}

std::string to_text(const CoeffExpr& c) {
  if (c.terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : c.terms) parts.push_back(to_text(t));
  return join(parts, " + ");
}

std::string to_latex(const XiProduct& p) {
  std::vector<std::string> num, den;
  for (const auto& [a, e] : display_order(p, +1)) num.push_back(xi_latex(a, e));
  for (const auto& [a, e] : display_order(p, -1)) den.push_back(xi_latex(a, e));
  std::string n = num.empty() ? "1" : join(num, " ");
  if (den.empty()) return n;
  return "\\frac{" + n + "}{" + join(den, " ") + "}";
}

std::string to_latex(const BFactor& b) {
  std::vector<std::string> params;
  for (const auto& p : b.params) params.push_back(p.latex());
  return "B_{" + join(b.charges, ",") + "}(" + join(params, ",") + ")";
}

std::string to_latex(const TermExpr& t) {
  std::vector<std::string> parts;
  if (!t.xi.is_one() || t.bfactors.empty()) parts.push_back(to_latex(t.xi));
  for (const auto& b : t.bfactors) parts.push_back(to_latex(b));
  return join(parts, " ");
}

std::string to_latex(const CoeffExpr& c) {
  if (c.terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : c.terms) parts.push_back(to_latex(t));
  return join(parts, "\n  + ");
}

TermExpr parse_term(std::string_view text) {
  Parser p(text);
  TermExpr t;
  p.product(t, +1);
  if (!p.done()) p.fail("trailing input");
  return t;
}

CoeffExpr parse_coeff(std::string_view text) {
  CoeffExpr c;
  std::string trimmed(text);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
  if (trimmed == "0") return c;
  for (const auto& part : split_terms(text)) c.terms.push_back(parse_term(part));
  return c;
}

}  // namespace ew
