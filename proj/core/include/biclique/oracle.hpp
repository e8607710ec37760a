#pragma once

#include <cstdint>
#include <vector>

#include "biclique/graph.hpp"
#include "biclique/matchings.hpp"
#include "biclique/poly.hpp"

// Deliberately naive reference computations. Nothing here uses the matching
// formulas; each function works from the definition it names.
namespace biclique::oracle {

inline constexpr int kMaxChromaticVertices = 12;
inline constexpr std::size_t kMaxMatchingEdges = 64;
inline constexpr std::size_t kMaxOrientationEdges = 18;

/// Deletion-contraction, P(G) = P(G - e) - P(G / e), with parallel edges
/// collapsed after contraction and the edgeless graph x^n as base case.
/// Throws SizeGuardExceeded above kMaxChromaticVertices.
IntPoly chromatic_poly_bruteforce(const SimpleGraph& g);

/// Number of proper colourings with q colours by direct enumeration of all
/// q^n assignments.
std::uint64_t count_colourings(const SimpleGraph& g, int q);

/// Enumerates the subsets of `edges` that are matchings (include/exclude per
/// edge, abandoning a branch once two chosen edges share a vertex) and buckets
/// them by size.
/// Result has length min(j,k) + 1. Throws SizeGuardExceeded above kMaxMatchingEdges.
MatchingNumbers matchings_bruteforce(int j, int k, const std::vector<ComplementEdge>& edges);

/// Enumerates all 2^|E| orientations and counts the acyclic ones.
/// Throws SizeGuardExceeded above max_edges.
std::uint64_t acyclic_orientations_bruteforce(const SimpleGraph& g,
                                              std::size_t max_edges = kMaxOrientationEdges);

}  // namespace biclique::oracle
