#include <doctest.h>

#include <random>

#include "biclique/errors.hpp"
#include "biclique/graph.hpp"
#include "biclique/matchings.hpp"
#include "biclique/oracle.hpp"

using namespace biclique;

namespace {

MatchingNumbers numbers(std::initializer_list<long> values) {
  MatchingNumbers m;
  for (long v : values) m.counts.emplace_back(v);
  return m;
}

}  // namespace

TEST_SUITE("matchings") {

TEST_CASE("small matching numbers") {
  CHECK(matching_numbers(BicliqueSpec(1, 1, {{0, 0}})) == numbers({1, 1}));
  CHECK(matching_numbers(BicliqueSpec(2, 3, {})) == numbers({1, 0, 0}));
  CHECK(matching_numbers(from_params(ThreeCliqueParams(1, 1, 1, 0, 0, 0))) == numbers({1, 6, 9, 2}));
  CHECK(matching_numbers(from_params(ThreeCliqueParams(0, 0, 0, 1, 1, 1))) == numbers({1, 3, 3, 1}));
  CHECK(matching_numbers(BicliqueSpec(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})) == numbers({1, 4, 2}));
}

TEST_CASE("family members") {
  CHECK(matching_numbers(from_params(ThreeCliqueParams(1, 1, 1, 1, 1, 2))) == numbers({1, 10, 30, 26}));
  CHECK(matching_numbers(from_params(ThreeCliqueParams(1, 1, 1, 1, 1, 3))) == numbers({1, 11, 36, 34}));
}

TEST_CASE("side swap does not change the numbers") {
  const BicliqueSpec s(2, 5, {{0, 0}, {0, 4}, {1, 4}, {1, 2}});
  CHECK(matching_numbers(s) == matching_numbers(s.swapped()));
  CHECK(matching_numbers(s).counts.size() == 3);
}

TEST_CASE("padding") {
  CHECK(numbers({1, 2}).padded(4) == numbers({1, 2, 0, 0}));
  CHECK(numbers({1, 2, 3}).padded(1) == numbers({1, 2, 3}));
  CHECK(numbers({1}).at(5) == 0);
}

TEST_CASE("complement transform examples") {
  CHECK(complement_matching_numbers(numbers({1, 3, 3, 1}), 3, 3) == numbers({1, 6, 9, 2}));
  CHECK(complement_matching_numbers(numbers({1, 6, 9, 2}), 3, 3) == numbers({1, 3, 3, 1}));
  CHECK(complement_matching_numbers(numbers({1, 0}), 1, 1) == numbers({1, 1}));
  // K_{2,3} itself: 6 edges, 6 two-edge matchings.
  CHECK(complement_matching_numbers(numbers({1, 6, 6}), 2, 3) == numbers({1, 0, 0}));
  CHECK(complement_matching_numbers(numbers({1}), 2, 3) == numbers({1, 6, 6}));
}

TEST_CASE("complement transform rejects unrealizable input") {
  CHECK_THROWS_AS(complement_matching_numbers(numbers({1, 10}), 1, 1), InconsistentInput);
  CHECK_THROWS_AS(complement_matching_numbers(numbers({1, 1, 1}), 1, 3), InconsistentInput);
  CHECK_THROWS_AS(complement_matching_numbers(numbers({1}), 0, 3), InvalidInput);
}

TEST_CASE("complement transform agrees with enumeration") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int j = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 7);
    std::vector<ComplementEdge> edges;
    for (int l = 0; l < j; ++l)
      for (int r = 0; r < k; ++r)
        if (coin(rng)) edges.emplace_back(l, r);
    const BicliqueSpec s(j, k, edges);
    const MatchingNumbers direct = matching_numbers(s);
    CHECK(direct == oracle::matchings_bruteforce(j, k, s.complement_edges()));
    const MatchingNumbers partner = matching_numbers(complement_partner(s));
    CHECK(complement_matching_numbers(direct, j, k) == partner);
    CHECK(complement_matching_numbers(complement_matching_numbers(direct, j, k), j, k) == direct);
  }
}

TEST_CASE("reflection condition") {
  CHECK(theorem2_condition(numbers({1, 6, 9, 2}), numbers({1, 3, 3, 1}), 3, 3, 3, 5));
  CHECK_FALSE(theorem2_condition(numbers({1, 6, 9, 2}), numbers({1, 3, 3, 1}), 3, 3, 3, 6));
  CHECK_FALSE(theorem2_condition(numbers({1, 3, 3, 1}), numbers({1, 3, 3, 1}), 3, 3, 3, 4));
  CHECK(theorem2_condition(numbers({1, 10, 30, 26}), numbers({1, 11, 36, 34}), 3, 7, 8, 10));
  CHECK_FALSE(theorem2_condition(numbers({1, 10, 30, 26}), numbers({1, 11, 36, 34}), 3, 7, 8, 11));
}

TEST_CASE("large sides stay exact") {
  // Complement = K_{12,12}: 12! perfect matchings.
  std::vector<ComplementEdge> all;
  for (int l = 0; l < 12; ++l)
    for (int r = 0; r < 12; ++r) all.emplace_back(l, r);
  const MatchingNumbers m = matching_numbers(BicliqueSpec(12, 12, all));
  CHECK(m.counts.back() == factorial(12));
  CHECK(m.counts[1] == 144);
  CHECK_THROWS_AS(matching_numbers(BicliqueSpec(kMaxMatchingSide + 1, kMaxMatchingSide + 1, {})),
                  InvalidInput);
}

}  // TEST_SUITE
