#include "biclique/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "biclique/errors.hpp"

namespace biclique {

MatchingNumbers MatchingNumbers::padded(std::size_t length) const {
  MatchingNumbers out = *this;
  if (out.counts.size() < length) out.counts.resize(length, Integer(0));
  return out;
}

MatchingNumbers matching_numbers(const BicliqueSpec& input) {
  // Branch on the larger side one vertex at a time; the state is the set of
  // already-matched vertices on the smaller side.
  const BicliqueSpec spec = input.normalized();
  const int small = spec.j();
  if (small > kMaxMatchingSide) {
    throw InvalidInput("matching_numbers: smaller side " + std::to_string(small) +
                       " exceeds the bitmask limit " + std::to_string(kMaxMatchingSide));
  }
  std::vector<std::uint32_t> neighbours(spec.k(), 0);
  for (const auto& [l, r] : spec.complement_edges()) neighbours[r] |= std::uint32_t{1} << l;

  const std::size_t states = std::size_t{1} << small;
  std::vector<Integer> ways(states, Integer(0));
  ways[0] = 1;
  std::uint32_t reachable = 0;  // union of neighbourhoods seen so far
  for (std::uint32_t nbrs : neighbours) {
    if (nbrs == 0) continue;
    reachable |= nbrs;
    // Descending mask order: a mask with bit l set is updated from mask ^ bit,
    // which is smaller and therefore still holds its pre-step value.
    for (std::size_t mask = states; mask-- > 1;) {
      if ((mask & ~static_cast<std::size_t>(reachable)) != 0) continue;
      std::uint32_t bits = static_cast<std::uint32_t>(mask) & nbrs;
      while (bits != 0) {
        const std::uint32_t bit = bits & (~bits + 1);
        bits ^= bit;
        const Integer& from = ways[mask ^ bit];
        if (from != 0) ways[mask] += from;
      }
    }
  }
  MatchingNumbers out;
  out.counts.assign(static_cast<std::size_t>(small) + 1, Integer(0));
  for (std::size_t mask = 0; mask < states; ++mask) {
    if (ways[mask] != 0) out.counts[std::popcount(static_cast<std::uint32_t>(mask))] += ways[mask];
  }
  return out;
}

MatchingNumbers complement_matching_numbers(const MatchingNumbers& numbers, int j, int k) {
  if (j < 1 || k < 1) throw InvalidInput("complement_matching_numbers: j and k must be >= 1");
  // The count of i-matchings of K_{j,k} through a fixed l-matching is
  // (j-l)!(k-l)!/((i-l)!(j-i)!(k-i)!), symmetric in j and k; no swap needed.
  const int limit = std::min(j, k);
  if (numbers.counts.size() > static_cast<std::size_t>(limit) + 1) {
    for (std::size_t i = limit + 1; i < numbers.counts.size(); ++i) {
      if (numbers.counts[i] != 0) {
        throw InconsistentInput("matching sequence is longer than min(j,k) + 1 allows");
      }
    }
  }
  MatchingNumbers out;
  out.counts.reserve(limit + 1);
  for (int i = 0; i <= limit; ++i) {
    Integer sum = 0;
    for (int l = 0; l <= i; ++l) {
      const Integer term = numbers.at(l) * binomial(j - l, j - i) * falling_value(k - l, i - l);
      if (l % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    if (sum < 0) {
      throw InconsistentInput("matching sequence is not realizable inside K_{" + std::to_string(j) +
                              "," + std::to_string(k) + "}: entry " + std::to_string(i) +
                              " of the complement is " + sum.get_str());
    }
    out.counts.push_back(std::move(sum));
  }
  return out;
}

bool theorem2_condition(const MatchingNumbers& g_numbers, const MatchingNumbers& h_numbers, int j,
                        int k_g, int k_h, const Integer& c) {
  const std::size_t length = static_cast<std::size_t>(j) + 1;
  if (g_numbers.counts.size() > length || h_numbers.counts.size() > length) return false;
  const MatchingNumbers mg = g_numbers.padded(length);
  const MatchingNumbers mh = h_numbers.padded(length);
  const Integer base = Integer(k_g) + k_h + j - c - 1;
  for (int i = 0; i <= j; ++i) {
    Integer sum = 0;
    for (int l = 0; l <= i; ++l) {
      const Integer term = mh.counts[l] * binomial(j - l, j - i) * falling_value(base - l, i - l);
      if (l % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    if (sum != mg.counts[i]) return false;
  }
  return true;
}

}  // namespace biclique
