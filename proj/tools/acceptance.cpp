// Acceptance report: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set passed via
// --expect-fail (empty by default), 1 otherwise. A criterion listed there
// that starts passing also yields 1, so the list cannot go stale silently.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ew/errors.hpp"
#include "ew/numeval.hpp"
#include "ew/orbits.hpp"
#include "ew/reduction.hpp"

using namespace ew;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects sub-check results for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_.empty()) return {true, summary + " (" + std::to_string(total_) + " checks)"};
    std::string d = std::to_string(failed_.size()) + "/" + std::to_string(total_) + " checks failed: ";
    for (std::size_t i = 0; i < failed_.size() && i < 4; ++i) d += (i ? "; " : "") + failed_[i];
    if (failed_.size() > 4) d += "; ...";
    return {false, d};
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

EisensteinSpec spec_for(const std::string& group, int node) {
  return EisensteinSpec::degenerate(make_root_system(CartanType::parse(group)), node);
}

ReductionResult run(const EisensteinSpec& spec, const std::string& support,
                    CosetStrategy strategy = CosetStrategy::LeviPruned) {
  ReductionOptions o;
  o.strategy = strategy;
  const auto sup = CharacterSupport::parse(support);
  return reduce(spec, sup, coset_table_for(spec, sup.nodes(), o));
}

CoeffExpr coeff(const std::string& group, int node, const std::string& support) {
  return run(spec_for(group, node), support).expr;
}

bool matches(const CoeffExpr& got, const std::string& printed) {
  return symbolically_equal(got, parse_coeff(printed));
}

std::string label(const std::string& group, int node, const std::string& support) {
  return group + " node " + std::to_string(node) + " {" + support + "}";
}

// Checks that the verdict at s0 is Eulerian and its surviving term equals the
// first term of the printed expression.
bool first_term_survives(const CoeffExpr& got, const std::string& printed, const Rational& s0) {
  const auto v = eulerianity_report(got, s0);
  if (v.kind != VerdictKind::Eulerian || !v.term) return false;
  const CoeffExpr first = canonicalize(CoeffExpr{{parse_coeff(printed).terms.front()}});
  const auto want = eulerianity_report(first, s0);
  return want.term && term_equal(*v.term, *want.term);
}

// Printed displays, in the engine's text syntax.
const std::string kSlMin = "B[1:m](s)";
const std::string kSlNtm = "xi(2s-1)/xi(2s) * B[1:m](s-1/2) * B[3:n](s-1/2)";
const std::string kD5 = "xi(2s-4)^2/(xi(2s)*xi(2s-3)) * B[4:m](5/2-s) * B[5:n](5/2-s)";
const std::string kD6 = "xi(2s-5)^2/(xi(2s)*xi(2s-4)) * B[5:m](3-s) * B[6:n](3-s)";
const std::string kD6Spinor3 = "xi(2s-5)^3/(xi(2s)*xi(2s-4)*xi(2s-2)) * B[1:m](3-s) * B[3:n](3-s) * B[6:p](3-s)";
const std::string kD6Spinor2 =
    "xi(2s-5)^2/(xi(2s)*xi(2s-2)) * B[1:m](3-s) * B[3:n](3-s)"
    " + xi(2s-5)^3/(xi(2s)*xi(2s-4)*xi(2s-2)) * B[1:m](3-s) * B[3:n](3-s)";
const std::string kE6 = "xi(2s-7)^2/(xi(2s)*xi(2s-3)) * B[1:m](4-s) * B[4:n](4-s)";
const std::string kE7 =
    "xi(2s-9)*xi(2s-6)/(xi(2s)*xi(2s-4)) * B[1:m](13/2-s) * B[7:n](5-s)"
    " + xi(2s-12)*xi(2s-9)^2/(xi(2s)*xi(2s-8)*xi(2s-4)) * B[1:m](7/2-s) * B[7:n](5-s)";
const std::string kE8A2 =
    "xi(2s-18)*xi(2s-14)*xi(2s-11)*xi(4s-29)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[7:m,8:n](6-s,19/2-s)";
const std::string kE83A1 =
    "xi(2s-11)^3/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[4:m](6-s) * B[6:n](6-s) * B[8:p](6-s)"
    " + xi(2s-18)^3*xi(4s-29)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[4:m](19/2-s) * B[6:n](19/2-s) * B[8:p](19/2-s)";
// The display's five grouped sums written out term by term.
const std::string kE82A1 =
    "xi(2s-11)^2/(xi(2s)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)"
    " + xi(2s-18)*xi(2s-14)*xi(2s-12)*xi(4s-29)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](13/2-s) * B[8:n](19/2-s)"
    " + xi(2s-11)^2*xi(2s-11)/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)"
    " + xi(2s-11)^2*xi(2s-13)/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)"
    " + xi(2s-11)^2*xi(2s-12)/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)"
    " + xi(2s-11)^2*xi(2s-10)/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)"
    " + xi(2s-18)^2*xi(4s-29)*xi(2s-19)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](19/2-s) * B[8:n](19/2-s)"
    " + xi(2s-18)^2*xi(4s-29)*xi(2s-17)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](19/2-s) * B[8:n](19/2-s)"
    " + xi(2s-18)^2*xi(4s-29)*xi(2s-15)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](19/2-s) * B[8:n](19/2-s)"
    " + xi(2s-18)^2*xi(4s-29)*xi(2s-18)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](19/2-s) * B[8:n](19/2-s)"
    " + xi(2s-18)^2*xi(4s-29)*xi(2s-16)/(xi(4s-28)*xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](19/2-s) * B[8:n](19/2-s)"
    " + xi(2s-14)*xi(2s-17)*xi(2s-11)/(xi(2s)*xi(2s-9)*xi(2s-5)) * B[6:m](9-s) * B[8:n](6-s)";

Outcome sl_minimal() {
  Checks c;
  for (int r = 1; r <= 6; ++r) {
    const std::string g = "A" + std::to_string(r);
    const auto got = coeff(g, 1, "1:m");
    c.expect(got.terms.size() == 1, g + " has one term");
    c.expect(matches(got, kSlMin), g + " equals B_m(s)");
    c.expect(eulerianity_report(got, std::nullopt).kind == VerdictKind::Eulerian, g + " Eulerian at generic s");
  }
  return c.outcome("A1..A6: single term B_m(s), Eulerian");
}

Outcome sl_next_to_minimal() {
  Checks c;
  for (const char* g : {"A3", "A4"}) {
    const auto got = coeff(g, 2, "1:m,3:n");
    c.expect(matches(got, kSlNtm), std::string(g) + " expression");
    c.expect(eulerianity_report(got, std::nullopt).kind == VerdictKind::Eulerian, std::string(g) + " Eulerian");
  }
  return c.outcome("SL_4, SL_5 node 2 {1,3}: xi(2s-1)/xi(2s) B_m(s-1/2) B_n(s-1/2)");
}

Outcome d5() {
  Checks c;
  c.expect(matches(coeff("D5", 1, "4:m,5:n"), kD5), label("D5", 1, "4,5"));
  return c.outcome("D5 node 1 {4,5} exact");
}

Outcome d6() {
  Checks c;
  c.expect(matches(coeff("D6", 1, "5:m,6:n"), kD6), label("D6", 1, "5,6"));
  return c.outcome("D6 node 1 {5,6} exact");
}

Outcome d6_spinor() {
  Checks c;
  const auto three = coeff("D6", 6, "1:m,3:n,6:p");
  const auto two = coeff("D6", 6, "1:m,3:n");
  c.expect(matches(three, kD6Spinor3), "3A1 {1,3,6} expression");
  c.expect(matches(two, kD6Spinor2), "2A1 {1,3} expression");
  c.expect(eulerianity_report(two, Rational(2)).kind == VerdictKind::Eulerian, "2A1 Eulerian at s = 2");
  c.expect(eulerianity_report(three, Rational(2)).kind == VerdictKind::Zero, "3A1 Zero at s = 2");
  return c.outcome("D6 node 6: 3A1 and 2A1 expressions; at s = 2 2A1 Eulerian, 3A1 Zero");
}

Outcome e6() {
  Checks c;
  const auto r = run(spec_for("E6", 1), "1:m");
  c.expect(r.candidates == 21, "21 candidates (got " + std::to_string(r.candidates) + ")");
  c.expect(r.expr.terms.size() == 6, "6 generic survivors (got " + std::to_string(r.expr.terms.size()) + ")");
  c.expect(matches(coeff("E6", 1, "1:m,4:n"), kE6), "{1,4} expression");
  return c.outcome("E6 node 1: {1} 21 candidates / 6 terms; {1,4} exact");
}

Outcome e7() {
  Checks c;
  const auto got = coeff("E7", 7, "1:m,7:n");
  c.expect(got.terms.size() == 2, "two terms");
  c.expect(matches(got, kE7), "printed two-term expression (computed sum exchanges the B_m arguments)");
  const auto v = eulerianity_report(got, Rational(4));
  c.expect(v.kind == VerdictKind::Eulerian, "s = 4 Eulerian");
  const auto printed_first = eulerianity_report(canonicalize(CoeffExpr{{parse_coeff(kE7).terms.front()}}), Rational(4));
  c.expect(v.term && printed_first.term && v.term->xi == printed_first.term->xi,
           "s = 4 survivor has the first printed term's xi prefactor");
  c.expect(first_term_survives(got, kE7, Rational(4)), "s = 4 survivor equals the first printed term");
  return c.outcome("E7 node 7 {1,7}: printed expression; s = 4 Eulerian");
}

Outcome e8() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const auto a2 = coeff("E8", 8, "7:m,8:n");
  const auto three = coeff("E8", 8, "4:m,6:n,8:p");
  const auto two = coeff("E8", 8, "6:m,8:n");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Rational s0(9, 2);
  c.expect(matches(a2, kE8A2), "A2 {7,8} expression");
  c.expect(eulerianity_report(a2, s0).kind == VerdictKind::Zero, "A2 Zero at s = 9/2");
  c.expect(matches(three, kE83A1), "3A1 {4,6,8} expression");
  c.expect(three.terms.size() == 2, "3A1 has two terms");
  c.expect(eulerianity_report(three, s0).kind == VerdictKind::Zero, "3A1 Zero at s = 9/2");
  c.expect(matches(two, kE82A1), "2A1 {6,8} expression");
  c.expect(first_term_survives(two, kE82A1, s0), "2A1: only the first term survives at s = 9/2");
  c.expect(secs < 60.0, "levi-pruned runtime under 60 s");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  return c.outcome("E8 node 8: A2, 3A1, 2A1 expressions and s = 9/2 verdicts; " + t.str() + " s");
}

Outcome strategy_equivalence() {
  Checks c;
  struct Config {
    std::string group;
    int node;
    std::string support;
  };
  std::vector<Config> configs{{"D5", 1, "4:m,5:n"}, {"D6", 1, "5:m,6:n"}, {"D6", 6, "1:m,3:n,6:p"},
                              {"D6", 6, "1:m,3:n"}, {"E6", 1, "1:m"},     {"E6", 1, "1:m,4:n"}};
  for (int r = 1; r <= 6; ++r) configs.push_back({"A" + std::to_string(r), 1, "1:m"});
  for (int r = 3; r <= 6; ++r) configs.push_back({"A" + std::to_string(r), 2, "1:m,3:n"});
  for (const auto& cfg : configs) {
    const auto spec = spec_for(cfg.group, cfg.node);
    const auto pruned = run(spec, cfg.support).expr;
    const auto full = run(spec, cfg.support, CosetStrategy::Exhaustive).expr;
    bool same = pruned.terms.size() == full.terms.size();
    for (std::size_t i = 0; same && i < pruned.terms.size(); ++i) same = term_equal(pruned.terms[i], full.terms[i]);
    c.expect(same && symbolically_equal(pruned, full), label(cfg.group, cfg.node, cfg.support));
  }
  return c.outcome(std::to_string(configs.size()) + " E6/D5/D6/A_n configurations identical");
}

Outcome gk_dimensions() {
  Checks c;
  auto check = [&](const CartanType& t, const std::string& key, int expected) {
    const int got = find_orbit(orbit_catalog(t), key).dim / 2;
    c.expect(got == expected, t.name() + " " + key + ": " + std::to_string(got) + " vs " + std::to_string(expected));
  };
  for (int n = 2; n <= 9; ++n) {
    check({Series::A, n - 1}, "A1", n - 1);
    if (n >= 4) check({Series::A, n - 1}, "2A1", 2 * n - 4);
  }
  for (int n = 4; n <= 8; ++n) {
    check({Series::D, n}, "A1", 2 * n - 3);
    Partition three(2 * n - 2, 1);
    three[0] = 3;
    check({Series::D, n}, partition_str(three), 2 * n - 2);
    if (n >= 5) {
      Partition twos(2 * n - 4, 1);
      std::fill(twos.begin(), twos.begin() + 4, 2);
      check({Series::D, n}, partition_str(twos), 4 * n - 10);
    }
  }
  for (auto [rank, mn, ntm] : {std::tuple{6, 11, 16}, std::tuple{7, 17, 26}, std::tuple{8, 29, 46}}) {
    check({Series::E, rank}, "A1", mn);
    check({Series::E, rank}, "2A1", ntm);
  }
  return c.outcome("SL_2..SL_9, SO_{4,4}..SO_{8,8}, E6, E7, E8");
}

// Random Whittaker pair around a positive root beta with beta(S) = 2 and S
// in (1/2)Z on the simple roots.
WhittakerPair random_pair(const ChevalleyAlgebra& g, std::mt19937& rng) {
  const auto& rs = g.roots();
  const int r = rs.rank();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rs.positive_roots().size()) - 1);
  std::uniform_int_distribution<int> half(-4, 4), charge(1, 5), coin(0, 1);
  const RootVec beta = rs.positive_roots()[pick(rng)];
  WhittakerPair p;
  p.s_values.resize(r);
  int solve = -1;
  for (int i = 0; i < r; ++i) {
    p.s_values[i] = Rational(half(rng), 2);
    if (beta[i] != 0) solve = i;
  }
  Rational rest;
  for (int i = 0; i < r; ++i)
    if (i != solve) rest += Rational(beta[i]) * p.s_values[i];
  p.s_values[solve] = (Rational(2) - rest) / Rational(beta[solve]);
  for (const auto& b : rs.positive_roots()) {
    if (root_value(b, p.s_values) != Rational(2) || (b != beta && coin(rng) == 0)) continue;
    RootVec nb = b;
    for (auto& x : nb) x = -x;
    p.phi.push_back({nb, Rational(charge(rng) * (coin(rng) ? 1 : -1))});
  }
  return p;
}

Outcome whittaker_pairs() {
  Checks c;
  std::mt19937 rng(20240611);
  int pairs = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"}) {
    const auto g = make_chevalley(CartanType::parse(name));
    const auto& rs = g->roots();
    for (int trial = 0; trial < 20; ++trial, ++pairs) {
      const auto p = random_pair(*g, rng);
      c.expect(same_span(n_S_phi(*g, p), omega_radical(*g, p), g->dim()), std::string(name) + " radical = n_{S,phi}");
    }
    // neutral h dominates h + tZ with Z vanishing on the support of phi
    std::map<int, Rational> support{{1, Rational(1)}};
    for (int k = 3; k <= rs.rank(); ++k)
      if (pairing(rs, rs.simple_roots()[0], rs.simple_roots()[k - 1]) == 0) {
        support[k] = Rational(-3);
        break;
      }
    const auto np = neutral_pair_for_nodes(*g, support);
    c.expect(check_sl2(*g, np).ok(), std::string(name) + " sl2 relations");
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> z(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        if (!support.count(i + 1)) z[i] = Rational(d(rng), 2);
      for (const Rational t : {Rational(0), Rational(1, 2), Rational(3)}) {
        WhittakerPair s = np.pair;
        for (int i = 0; i < rs.rank(); ++i) s.s_values[i] += t * z[i];
        c.expect(dominates(*g, np.pair, s), std::string(name) + " dominates h + tZ");
      }
    }
  }
  // isotropic subspaces for the minimal and next-to-minimal orbits
  int isotropic = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
    const auto g = make_chevalley(CartanType::parse(name));
    for (const auto& o : orbit_catalog(CartanType::parse(name))) {
      if (!o.minimal && !o.next_to_minimal) continue;
      std::map<int, Rational> nodes;
      for (int a : o.representative_nodes) nodes[a] = Rational(2);
      const auto np = neutral_pair_for_nodes(*g, nodes);
      c.expect(check_sl2(*g, np).ok(), std::string(name) + " " + o.label + " sl2 relations");
      const auto rep = isotropic_dimension_check(*g, np, o);
      c.expect(rep.holds, std::string(name) + " " + o.label + " isotropic I_max " + std::to_string(rep.i_max));
      ++isotropic;
    }
  }
  return c.outcome(std::to_string(pairs) + " random pairs, dominance family, sl2 triples, " + std::to_string(isotropic) +
                   " isotropic checks");
}

double xi_oracle(double x) {
  return std::pow(std::numbers::pi, -0.5 * x) * boost::math::tgamma(0.5 * x) * boost::math::zeta(x);
}

bool safe_point(double x) {
  for (int k = 0; k <= 20; ++k)
    if (std::abs(x + 2.0 * k) < 0.05) return false;
  return std::abs(x - 1.0) > 0.05;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Outcome numerics() {
  Checks c;
  for (double x : {0.1, 0.5, 1.0, 2.0, 2 * std::numbers::pi, 10.0, 50.0}) {
    const double exact = std::sqrt(std::numbers::pi / (2 * x)) * std::exp(-x);
    c.expect(rel(bessel_k(0.5, x), exact) < 1e-10, "K_{1/2}(" + std::to_string(x) + ")");
  }
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-9.0, 10.0);
  for (int done = 0; done < 20;) {
    const double x = u(rng);
    if (!safe_point(x) || !safe_point(1.0 - x)) continue;
    c.expect(rel(xi_num(x), xi_num(1.0 - x)) < 1e-10, "xi(x) = xi(1-x) at " + std::to_string(x));
    ++done;
  }
  std::uniform_int_distribution<int> slope(-4, 4), num(-24, 24), expo(-3, 3), nfac(1, 5);
  std::uniform_real_distribution<double> sdist(0.3, 7.7);
  for (int done = 0; done < 100;) {
    XiProduct p;
    for (int k = nfac(rng); k > 0; --k) {
      const int e = expo(rng);
      p.multiply(AffineArg{Rational(slope(rng)), Rational(num(rng), 2)}, e == 0 ? 1 : e);
    }
    const double s = sdist(rng);
    bool ok = true;
    double raw = 1.0;
    for (const auto& [arg, e] : p.factors()) {
      const double x = arg.at(s);
      if (!safe_point(x) || !safe_point(1.0 - x)) ok = false;
      else raw *= std::pow(xi_oracle(x), e);
    }
    if (!ok) continue;
    c.expect(rel(eval_xi_product(canonicalize(p), s), raw) < 1e-9, "canonicalized product at s = " + std::to_string(s));
    ++done;
  }
  return c.outcome("K_{1/2} closed form, xi functional equation, 100 canonicalized products");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance report", "acceptance"};
  std::vector<int> expected_failures;
  app.add_option("--expect-fail", expected_failures, "Criteria known to fail; exit 0 only if exactly these fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"SL_n minimal", sl_minimal},
      {"SL_n next-to-minimal", sl_next_to_minimal},
      {"D5 2A1", d5},
      {"D6 2A1", d6},
      {"D6 spinor", d6_spinor},
      {"E6", e6},
      {"E7", e7},
      {"E8", e8},
      {"strategy equivalence", strategy_equivalence},
      {"GK dimensions", gk_dimensions},
      {"Whittaker pairs", whittaker_pairs},
      {"numerics", numerics},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << ": " << o.detail << std::endl;
  }

  const std::set<int> expected(expected_failures.begin(), expected_failures.end());
  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected) std::cout << " " << id;
  }
  std::cout << "\n";
  if (failed != expected) {
    for (int id : failed)
      if (!expected.count(id)) std::cout << "unexpected failure: " << id << "\n";
    for (int id : expected)
      if (!failed.count(id)) std::cout << "expected failure now passes: " << id << "\n";
    return 1;
  }
  return 0;
}
