#include <doctest.h>

#include <random>

#include "biclique/chromatic.hpp"
#include "biclique/errors.hpp"
#include "biclique/matchings.hpp"
#include "biclique/reflect.hpp"

using namespace biclique;

namespace {

void check_pair(const FamilyPair& pair, const ThreeCliqueParams& g, const ThreeCliqueParams& h,
                long c, long v) {
  CHECK(pair.g == g);
  CHECK(pair.h == h);
  CHECK(pair.c == c);
  CHECK(pair.v == v);
  const auto found = find_reflection(left_clique_factor(from_params(pair.g)),
                                     left_clique_factor(from_params(pair.h)));
  REQUIRE(found.has_value());
  CHECK(*found == c);
}

}  // namespace

TEST_SUITE("reflect") {

TEST_CASE("translation") {
  const IntPoly g{9, -6, 1};   // (x-3)^2
  const IntPoly h{25, -10, 1}; // (x-5)^2
  CHECK(find_translation(g, h) == Integer(2));
  CHECK(find_translation(h, g) == Integer(-2));
  CHECK(find_translation(g, g) == Integer(0));
  CHECK_FALSE(find_translation(IntPoly{0, 0, 1}, IntPoly{1, 0, 1}).has_value());
  CHECK_THROWS_AS(find_translation(g, IntPoly{0, 1}), InvalidInput);
  CHECK_THROWS_AS(find_translation(IntPoly{0, 2}, IntPoly{0, 1}), InvalidInput);
  CHECK_THROWS_AS(find_translation(IntPoly{1}, IntPoly{1}), InvalidInput);
}

TEST_CASE("translation from matching-equivalent complements") {
  // One complement edge inside K_{2,3} and inside K_{2,5}.
  const IntPoly g = interesting_factor(BicliqueSpec(2, 3, {{0, 0}}));
  const IntPoly h = interesting_factor(BicliqueSpec(2, 5, {{0, 0}}));
  CHECK(g == IntPoly{9, -6, 1});
  CHECK(find_translation(g, h) == Integer(2));
}

TEST_CASE("reflection") {
  const IntPoly g{-13, 14, -6, 1};
  const IntPoly h{-32, 29, -9, 1};
  CHECK(find_reflection(g, h) == Integer(5));
  CHECK(find_reflection(h, g) == Integer(5));
  CHECK(find_reflection(IntPoly{0, 1}, IntPoly{0, 1}) == Integer(0));
  CHECK_FALSE(find_reflection(IntPoly{0, 0, 0, 1}, IntPoly{1, 0, 0, 1}).has_value());
  CHECK_THROWS_AS(find_reflection(g, IntPoly{0, 0, 1}), InvalidInput);
}

TEST_CASE("relate prefers translation") {
  // (x-1)(x-2) is symmetric, so it is both a translate and a reflection of itself.
  const IntPoly p{2, -3, 1};
  const RelationReport same = relate(p, p);
  CHECK(same.kind == RelationKind::kTranslation);
  CHECK(same.shift == 0);
  CHECK(same.verified);
  const RelationReport r = relate(IntPoly{-13, 14, -6, 1}, IntPoly{-32, 29, -9, 1});
  CHECK(r.kind == RelationKind::kReflection);
  CHECK(r.shift == 5);
  const RelationReport none = relate(IntPoly{0, 0, 0, 1}, IntPoly{1, 0, 0, 1});
  CHECK(none.kind == RelationKind::kNone);
  CHECK_FALSE(none.verified);
  CHECK(to_string(RelationKind::kReflection) == "reflection");
}

TEST_CASE("random shifts and reflections are recovered") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t deg = 1 + trial % 6;
    std::vector<Integer> c(deg + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    const IntPoly h(c);
    const Integer d = coef(rng);
    CHECK(find_translation(shift_poly(h, d), h) == d);
    CHECK(find_reflection(reflect_poly(h, d), h) == d);
  }
}

TEST_CASE("first family") {
  check_pair(prop5_pair(1, 1, 1, 2), {1, 1, 1, 1, 1, 2}, {1, 1, 1, 1, 1, 3}, 10, 3);
  check_pair(prop5_pair(0, 0, 0, 1), {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 2}, 4, 2);
  CHECK_THROWS_AS(prop5_pair(4, 4, 1, 0), InfeasibleFamily);
}

TEST_CASE("second family") {
  check_pair(prop6_pair(1, 1, 1, 3), {1, 1, 1, 1, 2, 3}, {1, 1, 1, 1, 2, 3}, 12, 3);
  check_pair(prop6_pair(0, 1, 0, 2), {0, 0, 0, 0, 1, 2}, {0, 0, 0, 0, 1, 2}, 6, 2);
  CHECK_THROWS_AS(prop6_pair(3, 1, 0, 0), InfeasibleFamily);
}

TEST_CASE("third family") {
  check_pair(prop7_pair(0, 0, 0, 2), {0, 0, 0, 0, 1, 2}, {0, 0, 0, 0, 1, 2}, 6, 2);
  // u + v = 4s - 2r + t^2 + 2t + 4 = 9 here.
  check_pair(prop7_pair(1, 1, 1, 3), {1, 1, 1, 2, 4, 3}, {1, 1, 1, 2, 4, 6}, 18, 6);
  CHECK_THROWS_AS(prop7_pair(5, 0, 0, 0), InfeasibleFamily);
}

TEST_CASE("third family with v = 4 is not a reflection at c = 18") {
  const IntPoly g = left_clique_factor(from_params(ThreeCliqueParams(1, 1, 1, 2, 4, 3)));
  const IntPoly h = left_clique_factor(from_params(ThreeCliqueParams(1, 1, 1, 2, 4, 4)));
  const auto c = find_reflection(g, h);
  CHECK((!c.has_value() || *c != 18));
}

TEST_CASE("family dispatch and input errors") {
  CHECK(family_pair(5, 1, 1, 1, 2).proposition == 5);
  CHECK(family_pair(7, 0, 0, 0, 2).proposition == 7);
  CHECK_THROWS_AS(family_pair(4, 1, 1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(prop5_pair(-1, 0, 0, 0), InvalidInput);
  // r = s = 0 makes the b-block r + s - 1 negative.
  CHECK_THROWS_AS(prop6_pair(0, 0, 0, 0), InfeasibleFamily);
}

TEST_CASE("family pairs satisfy the matching condition") {
  for (int prop = 5; prop <= 7; ++prop)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t)
          for (int u = 0; u <= 2; ++u) {
            FamilyPair pair;
            try {
              pair = family_pair(prop, r, s, t, u);
            } catch (const InfeasibleFamily&) {
              continue;
            }
            const BicliqueSpec g = from_params(pair.g);
            const BicliqueSpec h = from_params(pair.h);
            CHECK(theorem2_condition(matching_numbers(g), matching_numbers(h), 3, g.k(), h.k(), pair.c));
            CHECK(pair.below_convention == (g.k() < 3 || h.k() < 3));
            if (!pair.below_convention) CHECK(reflection_count_identity(g, h, pair.c));
          }
}

}  // TEST_SUITE
