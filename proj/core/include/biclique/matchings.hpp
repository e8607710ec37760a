#pragma once

#include <vector>

#include "biclique/graph.hpp"
#include "biclique/poly.hpp"

namespace biclique {

/// counts[i] is the number of i-edge matchings; counts[0] = 1.
struct MatchingNumbers {
  std::vector<Integer> counts;

  /// counts[i], or zero past the end.
  Integer at(std::size_t i) const { return i < counts.size() ? counts[i] : Integer(0); }
  /// Copy extended with zeros (never truncated) to the given length.
  MatchingNumbers padded(std::size_t length) const;

  friend bool operator==(const MatchingNumbers&, const MatchingNumbers&) = default;
};

/// Largest smaller side accepted by matching_numbers (bitmask state).
inline constexpr int kMaxMatchingSide = 20;

/// Matching numbers of the bipartite complement, length min(j,k) + 1.
/// Throws InvalidInput when min(j,k) exceeds kMaxMatchingSide.
MatchingNumbers matching_numbers(const BicliqueSpec& spec);

/// Matching numbers of the complement inside K_{j,k} of a graph with numbers
/// `numbers`. Result has length min(j,k) + 1. Throws InconsistentInput when
/// an entry comes out negative.
MatchingNumbers complement_matching_numbers(const MatchingNumbers& numbers, int j, int k);

/// Exact check, for every 0 <= i <= j, of
///   mG[i] = sum_l (-1)^l mH[l] C(j-l, j-i) (kG + kH + j - c - l - 1)_{i-l}.
/// Both sequences are zero-padded to length j + 1.
bool theorem2_condition(const MatchingNumbers& g_numbers, const MatchingNumbers& h_numbers, int j,
                        int k_g, int k_h, const Integer& c);

}  // namespace biclique
