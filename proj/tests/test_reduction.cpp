#include "doctest.h"

#include "ew/errors.hpp"
#include "ew/reduction.hpp"

using namespace ew;

namespace {

EisensteinSpec spec_for(const char* group, int node) {
  return EisensteinSpec::degenerate(make_root_system(CartanType::parse(group)), node);
}

ReductionResult run(const EisensteinSpec& spec, const char* support, CosetStrategy st = CosetStrategy::LeviPruned) {
  ReductionOptions o;
  o.strategy = st;
  auto sup = CharacterSupport::parse(support);
  return reduce(spec, sup, coset_table_for(spec, sup.nodes(), o));
}

CoeffExpr coeff(const EisensteinSpec& spec, const char* support) { return run(spec, support).expr; }

}  // namespace

TEST_CASE("character support parsing") {
  auto s = CharacterSupport::parse("4,5");
  CHECK(s.charges.at(4) == "m");
  CHECK(s.charges.at(5) == "n");
  CHECK(CharacterSupport::parse("6:p, 1:m").str() == "1:m,6:p");
  CHECK_THROWS_AS(CharacterSupport::parse("4:m,4:n"), ValidationError);
  CHECK_THROWS_AS(CharacterSupport::parse("x"), ValidationError);
  auto rs = make_root_system(CartanType::parse("E6"));
  CHECK_THROWS_AS(support_components(*rs, CharacterSupport::parse("1,3,4")), ValidationError);
  CHECK(support_components(*rs, CharacterSupport::parse("1,3,5")).size() == 2);
}

TEST_CASE("intertwiner of simple reflections") {
  auto spec = spec_for("A2", 1);
  const auto& rs = *spec.rs;
  CHECK(intertwiner(rs, WeylElement::identity(rs), spec.lambda).is_one());
  auto s1 = WeylElement::simple(rs, 1);
  CHECK(intertwiner(rs, s1, spec.lambda) == XiProduct::rank_one_ratio(AffineArg::parse("2s-1")));
  // s2 inverts alpha_2, where <alpha_2|lambda> = -1: xi(-1)/xi(0), forced zero
  auto m2 = intertwiner(rs, WeylElement::simple(rs, 2), spec.lambda);
  CHECK(m2.generic_order() > 0);
}

TEST_CASE("restricted parameters") {
  auto spec = spec_for("A3", 1);
  const auto& rs = *spec.rs;
  auto id = restricted_parameters(rs, WeylElement::identity(rs), spec.lambda, {1});
  CHECK(id.at(1) == AffineArg::parse("s"));
  // alpha_2 pairs to -1 with lambda: restricted parameter is the constant 0
  CHECK(restricted_parameters(rs, WeylElement::identity(rs), spec.lambda, {2}).at(2) == AffineArg::parse("0"));
}

TEST_CASE("SL_n minimal and next-to-minimal") {
  for (const char* g : {"A2", "A3", "A4", "A5", "A6"}) {
    CAPTURE(g);
    CHECK(symbolically_equal(coeff(spec_for(g, 1), "1:m"), parse_coeff("B[1:m](s)")));
  }
  for (const char* g : {"A3", "A4", "A5", "A6"}) {
    CAPTURE(g);
    CHECK(symbolically_equal(coeff(spec_for(g, 2), "1:m,3:n"),
                             parse_coeff("xi(2s-1)/xi(2s) * B[1:m](s-1/2) * B[3:n](s-1/2)")));
  }
}

TEST_CASE("candidate bookkeeping") {
  auto e6 = run(spec_for("E6", 1), "1:m");
  CHECK(e6.candidates == 21);
  CHECK(e6.expr.terms.size() == 6);
  CHECK(e6.candidates == e6.expr.terms.size() + e6.dropped_nongeneric + e6.dropped_order);
  auto e8 = run(spec_for("E8", 8), "6:m,8:n");
  CHECK(e8.candidates == e8.expr.terms.size() + e8.dropped_nongeneric + e8.dropped_order);
}

TEST_CASE("exhaustive and pruned enumeration give identical coefficients") {
  struct C {
    const char* g;
    int node;
    const char* sup;
  };
  for (auto c : {C{"A3", 1, "1"}, C{"A4", 1, "1"}, C{"A4", 2, "1,3"}, C{"A5", 2, "1,3"}, C{"A5", 3, "2,4"},
                 C{"D4", 1, "3,4"}, C{"D5", 1, "4,5"}, C{"D5", 5, "1,3"}, C{"D6", 1, "5,6"}, C{"D6", 6, "1,3,6"},
                 C{"D6", 6, "1,3"}, C{"E6", 1, "1"}, C{"E6", 1, "1,4"}, C{"E6", 1, "2,3"}, C{"E6", 6, "5,6"}}) {
    CAPTURE(c.g);
    CAPTURE(c.sup);
    auto spec = spec_for(c.g, c.node);
    auto a = run(spec, c.sup, CosetStrategy::LeviPruned).expr;
    auto b = run(spec, c.sup, CosetStrategy::Exhaustive).expr;
    CHECK(symbolically_equal(a, b));
    CHECK(to_text(a) == to_text(b));
  }
}

TEST_CASE("threaded reduction matches the serial one") {
  auto spec = spec_for("E8", 8);
  auto sup = CharacterSupport::parse("6:m,8:n");
  ReductionOptions o;
  auto table = coset_table_for(spec, sup.nodes(), o);
  auto serial = reduce(spec, sup, table, 1);
  auto threaded = reduce(spec, sup, table, 4);
  CHECK(to_text(serial.expr) == to_text(threaded.expr));
}

TEST_CASE("verdicts at special points") {
  auto d6 = spec_for("D6", 6);
  CHECK(eulerianity_report(coeff(d6, "1:m,3:n"), Rational(2)).kind == VerdictKind::Eulerian);
  CHECK(eulerianity_report(coeff(d6, "1:m,3:n,6:p"), Rational(2)).kind == VerdictKind::Zero);
  CHECK(eulerianity_report(coeff(d6, "1:m,3:n"), std::nullopt).kind == VerdictKind::NonEulerian);

  auto e7 = coeff(spec_for("E7", 7), "1:m,7:n");
  CHECK(e7.terms.size() == 2);
  auto v7 = eulerianity_report(e7, Rational(4));
  CHECK(v7.kind == VerdictKind::Eulerian);
  REQUIRE(v7.term);
  // the survivor is the term whose prefactor has two numerator factors
  int numerator = 0;
  for (const auto& [arg, e] : v7.term->xi.factors()) numerator += e > 0 ? e : 0;
  CHECK(numerator == 2);

  auto e8 = spec_for("E8", 8);
  const Rational nine_halves(9, 2);
  CHECK(eulerianity_report(coeff(e8, "7:m,8:n"), nine_halves).kind == VerdictKind::Zero);
  CHECK(eulerianity_report(coeff(e8, "4:m,6:n,8:p"), nine_halves).kind == VerdictKind::Zero);
  auto two = coeff(e8, "6:m,8:n");
  auto v8 = eulerianity_report(two, nine_halves);
  CHECK(v8.kind == VerdictKind::Eulerian);
  REQUIRE(v8.term);
  CHECK(term_equal(*v8.term, parse_term("xi(2s-11)^2/(xi(2s)*xi(2s-5)) * B[6:m](6-s) * B[8:n](6-s)")));
}

TEST_CASE("constant term along the Borel") {
  auto a1 = spec_for("A1", 1);
  CHECK(symbolically_equal(constant_term(a1), parse_coeff("1 + xi(2s-1)/xi(2s)")));
  auto a2 = spec_for("A2", 1);
  auto expected = parse_coeff("1 + xi(2s-1)/xi(2s) + xi(2s-2)/xi(2s)");
  CHECK(symbolically_equal(constant_term(a2), expected));
  ReductionOptions ex;
  ex.strategy = CosetStrategy::Exhaustive;
  CHECK(symbolically_equal(constant_term(a2, ex), expected));
}

TEST_CASE("input validation") {
  auto spec = spec_for("D5", 1);
  CHECK_THROWS_AS(degenerate_whittaker(spec, CharacterSupport{}), ValidationError);
  CHECK_THROWS_AS(degenerate_whittaker(spec, CharacterSupport::parse("9:m")), ValidationError);
  CHECK_THROWS_AS(spec_for("E6", 7), ValidationError);
}
