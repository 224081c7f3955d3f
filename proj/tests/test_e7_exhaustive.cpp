#include "doctest.h"

#include "ew/reduction.hpp"

using namespace ew;

// Full enumeration of W(E7); tens of seconds, labelled slow.
TEST_CASE("E7 exhaustive enumeration agrees with the pruned table") {
  const auto spec = EisensteinSpec::degenerate(make_root_system(Series::E, 7), 7);
  const auto support = CharacterSupport::parse("1:m,7:n");
  ReductionOptions full;
  full.strategy = CosetStrategy::Exhaustive;
  const auto a = degenerate_whittaker(spec, support);
  const auto b = degenerate_whittaker(spec, support, full);
  REQUIRE(a.terms.size() == b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) CHECK(term_equal(a.terms[i], b.terms[i]));
  CHECK(symbolically_equal(a, b));
}
