#include "doctest.h"

#include <fstream>
#include <random>

#include "ew/errors.hpp"
#include "ew/io.hpp"

using namespace ew;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory, removed on scope exit.
struct ScratchDir {
  fs::path path;
  ScratchDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ewhit-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::size_t files_in(const fs::path& dir) {
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++n;
  return n;
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("rationals and affine arguments round trip") {
  for (const auto& r : {Rational(0), Rational(-7, 3), Rational(9, 2), Rational(123456789)})
    CHECK(rational_from_json(to_json(r)) == r);
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ValidationError);
  const AffineArg a{Rational(-1), Rational(13, 2)};
  CHECK(affine_from_json(to_json(a)) == a);
  CHECK(to_json(a).dump() == R"({"intercept":"13/2","slope":"-1"})");
}

TEST_CASE("coefficient expressions round trip through JSON") {
  const char* texts[] = {
      "xi(2s-4)^2/(xi(2s)*xi(2s-3)) * B[4:m](5/2-s) * B[5:n](5/2-s)",
      "B[1:m](s) + xi(2s-1)/xi(2s) * B[1:m](1-s)",
      "xi(2s-9)^2*xi(2s-12)/(xi(2s)*xi(2s-4)*xi(2s-8)) * B[7:m,8:n](6-s,19/2-s)",
      "1",
  };
  for (const char* text : texts) {
    const CoeffExpr c = parse_coeff(text);
    const Json j = to_json(c);
    const CoeffExpr back = coeff_from_json(Json::parse(j.dump()));
    CHECK(symbolically_equal(back, c));
    CHECK(to_text(back) == to_text(c));
    CHECK(j.at("text") == to_text(c));
  }
  CHECK(coeff_from_json(to_json(CoeffExpr{})).is_zero());
  CHECK_THROWS_AS(bfactor_from_json(Json::parse(R"({"nodes":[],"charges":[],"params":[]})")), ValidationError);
}

TEST_CASE("engine output round trips, coset ids included") {
  auto spec = EisensteinSpec::degenerate(make_root_system(Series::D, 6), 6);
  const auto c = degenerate_whittaker(spec, CharacterSupport::parse("1:m,3:n"));
  const auto back = coeff_from_json(Json::parse(to_json(c).dump()));
  REQUIRE(back.terms.size() == c.terms.size());
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    CHECK(back.terms[i].coset_id == c.terms[i].coset_id);
    CHECK(term_equal(back.terms[i], c.terms[i]));
  }
}

TEST_CASE("verdict, root system and catalog documents") {
  auto spec = EisensteinSpec::degenerate(make_root_system(Series::E, 8), 8);
  const auto support = CharacterSupport::parse("6:m,8:n");
  const auto c = degenerate_whittaker(spec, support);
  const auto v = eulerianity_report(c, Rational(9, 2));
  const Json jv = to_json(v);
  CHECK(jv.at("kind") == "Eulerian");
  CHECK(jv.at("surviving") == 1);
  CHECK(jv.contains("term"));

  const Json doc = result_to_json(spec, support, CosetStrategy::LeviPruned, c,
                                  {{"generic", eulerianity_report(c, std::nullopt)}, {"9/2", v}});
  CHECK(doc.at("schema_version") == kSchemaVersion);
  CHECK(doc.at("group") == "E8");
  CHECK(doc.at("terms").size() == 12);  // the printed five sums, expanded
  CHECK(doc.at("verdicts").at("9/2").at("kind") == "Eulerian");
  CHECK(doc.at("verdicts").at("generic").at("kind") == "NonEulerian");
  CHECK(doc.at("lambda").size() == 8);
  CHECK(doc.at("support").at("6") == "m");

  const Json rs = to_json(*make_root_system(Series::E, 6));
  CHECK(rs.at("positive_roots").size() == 36);
  CHECK(rs.at("weyl_group_order") == 51840);
  CHECK(rs.at("cartan_matrix").size() == 6);

  const Json cat = catalog_to_json(orbit_catalog(CartanType{Series::D, 4}));
  CHECK(cat.at("group") == "D4");
  bool saw_class = false;
  for (const auto& o : cat.at("orbits"))
    if (o.contains("very_even_class")) saw_class = true;
  CHECK(saw_class);
  CHECK(cat.at("closure").size() > 0);
}

TEST_CASE("coset tables round trip through JSON") {
  auto rs = make_root_system(Series::E, 6);
  auto spec = EisensteinSpec::degenerate(rs, 1);
  for (auto strategy : {CosetStrategy::LeviPruned, CosetStrategy::Exhaustive}) {
    ReductionOptions opts;
    opts.strategy = strategy;
    const auto t = coset_table_for(spec, {1, 4}, opts);
    const auto back = coset_table_from_json(Json::parse(to_json(t).dump()), rs);
    REQUIRE(back.size() == t.size());
    CHECK(back.strategy() == t.strategy());
    CHECK(back.levi() == t.levi());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(back.word_vector(i) == t.word_vector(i));
      CHECK(back.key(i) == t.key(i));
      CHECK(back.rho_image(i) == t.rho_image(i));
    }
  }
  Json j = to_json(coset_table_for(spec, {1}, {}));
  CHECK_THROWS_AS(coset_table_from_json(j, make_root_system(Series::E, 7)), ValidationError);
  j["schema_version"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(coset_table_from_json(j, rs), ValidationError);
}

TEST_CASE("cached E8 coset table replays to the same coefficient") {
  ScratchDir dir;
  CosetCache cache(dir.path);
  auto spec = EisensteinSpec::degenerate(make_root_system(Series::E, 8), 8);
  for (const char* text : {"6:m,8:n", "4:m,6:n,8:p", "7:m,8:n"}) {
    const auto support = CharacterSupport::parse(text);
    const auto fresh = degenerate_whittaker(spec, support);
    bool hit = true;
    const auto first = cache.get_or_compute(spec, support.nodes(), {}, &hit);
    CHECK_FALSE(hit);
    const auto replay = cache.get_or_compute(spec, support.nodes(), {}, &hit);
    CHECK(hit);
    const auto replayed = reduce(spec, support, replay).expr;
    REQUIRE(replayed.terms.size() == fresh.terms.size());
    for (std::size_t i = 0; i < fresh.terms.size(); ++i) {
      CHECK(term_equal(replayed.terms[i], fresh.terms[i]));
      CHECK(replayed.terms[i].coset_id == fresh.terms[i].coset_id);
    }
    CHECK(symbolically_equal(replayed, fresh));
  }
  // one file per key, no temporaries left behind
  CHECK(files_in(dir.path) == 3);
  for (const auto& e : fs::directory_iterator(dir.path)) CHECK(e.path().extension() == ".json");
}

TEST_CASE("cache keys and damaged files") {
  const CartanType e8{Series::E, 8};
  const auto k = CosetCache::key(e8, {1, 2, 3, 4, 5, 6, 7}, {6, 8}, CosetStrategy::LeviPruned);
  CHECK(k.size() == 16);
  CHECK(k == CosetCache::key(e8, {7, 6, 5, 4, 3, 2, 1}, {8, 6}, CosetStrategy::LeviPruned));
  CHECK(k != CosetCache::key(e8, {1, 2, 3, 4, 5, 6, 7}, {6, 8}, CosetStrategy::Exhaustive));
  CHECK(k != CosetCache::key(e8, {1, 2, 3, 4, 5, 6, 7}, {7, 8}, CosetStrategy::LeviPruned));
  CHECK(k != CosetCache::key(CartanType{Series::E, 7}, {1, 2, 3, 4, 5, 6, 7}, {6, 8}, CosetStrategy::LeviPruned));

  ScratchDir dir;
  CosetCache cache(dir.path);
  auto spec = EisensteinSpec::degenerate(make_root_system(Series::D, 5), 1);
  const std::vector<int> support{4, 5};
  const auto key = CosetCache::key(spec.rs->type(), spec.levi(), support, CosetStrategy::LeviPruned);
  std::ofstream(cache.path_for(key)) << "{ not json";
  CHECK_FALSE(cache.load(spec.rs, spec.levi(), support, CosetStrategy::LeviPruned).has_value());
  bool hit = true;
  cache.get_or_compute(spec, support, {}, &hit);
  CHECK_FALSE(hit);
  CHECK(cache.load(spec.rs, spec.levi(), support, CosetStrategy::LeviPruned).has_value());
}

TEST_CASE("cache directory from the environment") {
  ScratchDir dir;
  ::setenv("EWHIT_CACHE_DIR", (dir.path / "sub").c_str(), 1);
  auto c = CosetCache::from_env();
  REQUIRE(c.has_value());
  CHECK(fs::is_directory(dir.path / "sub"));
  ::setenv("EWHIT_CACHE_DIR", "", 1);
  CHECK_FALSE(CosetCache::from_env().has_value());
  ::unsetenv("EWHIT_CACHE_DIR");
  CHECK_FALSE(CosetCache::from_env().has_value());
}
