#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biclique/poly.hpp"

namespace biclique {

/// Edge of the bipartite complement: (left index, right index).
using ComplementEdge = std::pair<int, int>;

/// A (j,k)-biclique: a j-clique and a k-clique joined by bridging edges,
/// stored through its bipartite complement, i.e. the bridging pairs that are
/// NOT edges. Edges are kept sorted and unique.
class BicliqueSpec {
 public:
  /// Throws InvalidInput when j or k is below 1, an index is out of range or
  /// an edge is repeated.
  BicliqueSpec(int j, int k, std::vector<ComplementEdge> complement_edges);

  int j() const { return j_; }
  int k() const { return k_; }
  int order() const { return j_ + k_; }
  const std::vector<ComplementEdge>& complement_edges() const { return edges_; }
  std::size_t complement_size() const { return edges_.size(); }
  /// Bridging edges of G, i.e. j*k minus the complement size.
  std::size_t bridging_size() const;

  bool has_complement_edge(int left, int right) const;
  int left_degree(int left) const;
  int right_degree(int right) const;

  /// Every vertex of the complement has degree >= 1, so no vertex of G is
  /// adjacent to all others.
  bool is_strict() const;

  /// Same graph with the roles of the two cliques exchanged.
  BicliqueSpec swapped() const;
  /// Swaps sides when j > k.
  BicliqueSpec normalized() const { return j_ > k_ ? swapped() : *this; }

  friend bool operator==(const BicliqueSpec&, const BicliqueSpec&) = default;

 private:
  int j_;
  int k_;
  std::vector<ComplementEdge> edges_;
};

/// (a,b,c,d,e,f) parameterization of a (3,k)-biclique. The six counts are
/// the sizes of the right-side blocks adjacent in G to exactly v1, v2, v3
/// (a, b, c) and to exactly {v2,v3}, {v1,v3}, {v1,v2} (d, e, f).
struct ThreeCliqueParams {
  std::array<Integer, 6> values;

  ThreeCliqueParams() : values{0, 0, 0, 0, 0, 0} {}
  ThreeCliqueParams(Integer a, Integer b, Integer c, Integer d, Integer e, Integer f)
      : values{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)} {}

  const Integer& a() const { return values[0]; }
  const Integer& b() const { return values[1]; }
  const Integer& c() const { return values[2]; }
  const Integer& d() const { return values[3]; }
  const Integer& e() const { return values[4]; }
  const Integer& f() const { return values[5]; }

  Integer k() const;
  bool all_non_negative() const;
  std::string to_string() const;

  friend bool operator==(const ThreeCliqueParams&, const ThreeCliqueParams&) = default;
};

/// Undirected simple graph on vertices 0..n-1; oracle input.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
};

/// Largest k materialized by from_params.
inline constexpr long kMaxMaterializedClique = 1L << 20;

/// Lays the right vertices out in blocks [a|b|c|d|e|f]. Throws
/// DegenerateParameters when k = 0 and InvalidInput on negative counts or a
/// k above kMaxMaterializedClique.
BicliqueSpec from_params(const ThreeCliqueParams& params);

/// Complement of the bridging-edge set inside K_{j,k}.
BicliqueSpec complement_partner(const BicliqueSpec& spec);

/// Result of removing the vertices of G adjacent to everything else.
struct StripResult {
  int p_left = 0;
  int p_right = 0;
  /// Empty when no bridging non-edge remains, i.e. G is the complete graph
  /// K_{j+k} and both sides were stripped entirely.
  std::optional<BicliqueSpec> reduced;

  int removed() const { return p_left + p_right; }
};

/// Removes every complement-isolated vertex on both sides. With
/// p = removed(), P_G(x) = (x)_p * P_H(x - p).
StripResult strip_universal(const BicliqueSpec& spec);

/// n = j + k; left vertices are 0..j-1, right vertices j..j+k-1.
SimpleGraph to_simple_graph(const BicliqueSpec& spec);

}  // namespace biclique
