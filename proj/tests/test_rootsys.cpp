#include "doctest.h"

#include "ew/errors.hpp"
#include "ew/rootsys.hpp"

using namespace ew;

namespace {

std::vector<CartanType> all_types() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 7; ++n) out.push_back({Series::A, n});
  for (int n = 4; n <= 7; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Series::E, n});
  return out;
}

std::size_t expected_positive(const CartanType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(RootSystem::build(Series::A, 2).positive_roots().size() == 3);
  CHECK(RootSystem::build(Series::D, 4).positive_roots().size() == 12);
  CHECK(RootSystem::build(Series::E, 8).positive_roots().size() == 120);
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    CHECK(RootSystem::build(t).positive_roots().size() == expected_positive(t));
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(RootSystem::build(Series::D, 3), ValidationError);
  CHECK_THROWS_AS(RootSystem::build(Series::E, 9), ValidationError);
  CHECK_THROWS_AS(RootSystem::build(Series::A, 0), ValidationError);
  CHECK_THROWS_AS(CartanType::parse("G2"), ValidationError);
  CHECK(CartanType::parse("e_8") == CartanType{Series::E, 8});
  CHECK(CartanType::parse("D5").name() == "D5");
}

TEST_CASE("cartan matrix shape and reconstruction from pairings") {
  for (const auto& t : all_types()) {
    auto rs = RootSystem::build(t);
    const auto& c = rs.cartan_matrix();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        CHECK(c[i][j] == c[j][i]);
        if (i == j)
          CHECK(c[i][j] == 2);
        else
          CHECK((c[i][j] == 0 || c[i][j] == -1));
        CHECK(pairing(rs, rs.simple_roots()[i], rs.simple_roots()[j]) == c[i][j]);
      }
  }
}

TEST_CASE("roots have squared length two and positive roots are nonnegative") {
  for (const auto& t : all_types()) {
    auto rs = RootSystem::build(t);
    for (const auto& a : rs.positive_roots()) {
      CHECK(pairing(rs, a, a) == 2);
      for (int c : a) CHECK(c >= 0);
    }
  }
}

TEST_CASE("rho pairs to one with each simple coroot and sums the positive roots") {
  for (const auto& t : all_types()) {
    auto rs = RootSystem::build(t);
    auto rho = rs.weyl_vector();
    for (const auto& a : rs.simple_roots()) CHECK(pairing(rs, a, rho) == Rational(1));
    std::vector<Rational> two_rho(rs.rank(), Rational(0));
    for (const auto& a : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) two_rho[i] += Rational(a[i]);
    for (int i = 0; i < rs.rank(); ++i) CHECK(two_rho[i] == Rational(2) * rs.weyl_vector_root_basis()[i]);
  }
}

TEST_CASE("simple reflections permute positive roots except alpha_i") {
  for (const auto& t : all_types()) {
    auto rs = RootSystem::build(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      for (const auto& a : rs.positive_roots()) {
        auto r = rs.reflect(i, a);
        if (a == rs.simple_roots()[i - 1]) {
          for (int k = 0; k < rs.rank(); ++k) CHECK(r[k] == -a[k]);
        } else {
          CHECK(rs.is_positive(r));
        }
      }
    }
  }
}

TEST_CASE("fundamental weight pairings") {
  auto rs = RootSystem::build(Series::A, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pairing(rs, rs.simple_roots()[j - 1], fundamental_weight(rs, i)) == Rational(i == j ? 1 : 0));
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK(pairing(a2, a2.simple_roots()[0], a2.simple_roots()[1]) == -1);
  // weight-weight pairing agrees with root-weight pairing on root-lattice weights
  auto d5 = RootSystem::build(Series::D, 5);
  for (const auto& a : d5.positive_roots()) {
    std::vector<Rational> wc;
    for (int c : d5.root_to_weight(a)) wc.emplace_back(c);
    CHECK(pairing(d5, WeightVector{wc}, WeightVector{wc}) == Rational(2));
  }
}

TEST_CASE("highest root of E8 pairs with rho to 29") {
  auto rs = RootSystem::build(Series::E, 8);
  CHECK(pairing(rs, rs.highest_root(), rs.weyl_vector()) == Rational(29));
  CHECK(rs.height(rs.highest_root()) == 29);
}

TEST_CASE("pairing rejects mismatched dimensions") {
  auto rs = RootSystem::build(Series::A, 2);
  CHECK_THROWS_AS(pairing(rs, RootVec{1, 0, 0}, RootVec{1, 0}), ValidationError);
  CHECK_THROWS_AS(pairing(rs, RootVec{1, 0}, WeightVector{{Rational(1)}}), ValidationError);
}

TEST_CASE("eisenstein weight coordinates") {
  auto a2 = RootSystem::build(Series::A, 2);
  auto w = eisenstein_weight(a2, 1);
  CHECK(w.coords[0].str() == "2s-1");
  CHECK(w.coords[1].str() == "-1");
  auto e8 = RootSystem::build(Series::E, 8);
  auto l8 = eisenstein_weight(e8, 8);
  for (int i = 0; i < 7; ++i) CHECK(l8.coords[i] == AffineArg::constant(Rational(-1)));
  CHECK(pairing(e8, e8.simple_roots()[7], l8).str() == "2s-1");
  CHECK_THROWS_AS(eisenstein_weight(e8, 9), ValidationError);
}

TEST_CASE("weyl group orders") {
  CHECK(RootSystem::build(Series::A, 3).weyl_group_order() == 24);
  CHECK(RootSystem::build(Series::D, 5).weyl_group_order() == 1920);
  CHECK(RootSystem::build(Series::E, 6).weyl_group_order() == 51840);
}
