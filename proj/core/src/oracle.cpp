#include "biclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "biclique/errors.hpp"

namespace biclique::oracle {

namespace {

using Mask = std::uint32_t;
using Adjacency = std::vector<Mask>;

Adjacency adjacency_of(const SimpleGraph& g) {
  Adjacency adj(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw InvalidInput("oracle: edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is a loop or out of range");
    }
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

// Drops vertex `gone` and renumbers the vertices above it down by one.
Mask remove_bit(Mask m, int gone) {
  const Mask low = m & ((Mask{1} << gone) - 1);
  const Mask high = (m >> (gone + 1)) << gone;
  return low | high;
}

class DeletionContraction {
 public:
  IntPoly run(const Adjacency& adj) {
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;
    IntPoly result = compute(adj);
    memo_.emplace(adj, result);
    return result;
  }

 private:
  IntPoly compute(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    int u = -1;
    int best = 0;
    long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
      const int d = std::popcount(adj[v]);
      degree_sum += d;
      if (d > best) {
        best = d;
        u = v;
      }
    }
    if (u < 0) return IntPoly::monomial(static_cast<std::size_t>(n));
    if (degree_sum == static_cast<long>(n) * (n - 1)) {
      return falling_factorial(static_cast<std::size_t>(n));
    }
    const int w = std::countr_zero(adj[u]);

    // G - e
    Adjacency deleted = adj;
    deleted[u] &= ~(Mask{1} << w);
    deleted[w] &= ~(Mask{1} << u);

    // G / e: merge w into u, collapse parallel edges, drop w.
    Adjacency merged = deleted;
    merged[u] |= merged[w];
    for (int v = 0; v < n; ++v) {
      if (merged[w] >> v & 1) merged[v] |= Mask{1} << u;
    }
    Adjacency contracted;
    contracted.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
      if (v != w) contracted.push_back(remove_bit(merged[v] & ~(Mask{1} << w), w));
    }
    return run(deleted) - run(contracted);
  }

  std::map<Adjacency, IntPoly> memo_;
};

}  // namespace

IntPoly chromatic_poly_bruteforce(const SimpleGraph& g) {
  if (g.n > kMaxChromaticVertices) {
    throw SizeGuardExceeded("chromatic oracle limited to " + std::to_string(kMaxChromaticVertices) +
                            " vertices (got " + std::to_string(g.n) + ")");
  }
  if (g.n == 0) return IntPoly::constant(1);
  DeletionContraction dc;
  return dc.run(adjacency_of(g));
}

std::uint64_t count_colourings(const SimpleGraph& g, int q) {
  if (q < 0) throw InvalidInput("count_colourings: negative number of colours");
  if (g.n == 0) return 1;
  if (q == 0) return 0;
  std::vector<int> colour(g.n, 0);
  std::uint64_t proper = 0;
  while (true) {
    const bool ok = std::none_of(g.edges.begin(), g.edges.end(),
                                 [&](const auto& e) { return colour[e.first] == colour[e.second]; });
    proper += ok ? 1 : 0;
    int pos = 0;
    while (pos < g.n && ++colour[pos] == q) colour[pos++] = 0;
    if (pos == g.n) break;
  }
  return proper;
}

MatchingNumbers matchings_bruteforce(int j, int k, const std::vector<ComplementEdge>& edges) {
  if (edges.size() > kMaxMatchingEdges) {
    throw SizeGuardExceeded("matching oracle limited to " + std::to_string(kMaxMatchingEdges) +
                            " edges (got " + std::to_string(edges.size()) + ")");
  }
  for (const auto& [l, r] : edges) {
    if (l < 0 || l >= j || r < 0 || r >= k || l >= 64 || r >= 64) {
      throw InvalidInput("matching oracle: edge out of range");
    }
  }
  MatchingNumbers out;
  out.counts.assign(static_cast<std::size_t>(std::min(j, k)) + 1, Integer(0));
  // Include/exclude every edge in turn; a branch is abandoned as soon as the
  // chosen subset stops being a matching, so only matchings are reached.
  std::vector<std::uint64_t> tally(out.counts.size(), 0);
  auto walk = [&](auto&& self, std::size_t e, std::uint64_t left, std::uint64_t right,
                  std::size_t size) -> void {
    if (e == edges.size()) {
      ++tally[size];
      return;
    }
    self(self, e + 1, left, right, size);
    const auto lb = std::uint64_t{1} << edges[e].first;
    const auto rb = std::uint64_t{1} << edges[e].second;
    if (!(left & lb) && !(right & rb)) self(self, e + 1, left | lb, right | rb, size + 1);
  };
  walk(walk, 0, 0, 0, 0);
  for (std::size_t i = 0; i < tally.size(); ++i) out.counts[i] = static_cast<unsigned long>(tally[i]);
  return out;
}

std::uint64_t acyclic_orientations_bruteforce(const SimpleGraph& g, std::size_t max_edges) {
  if (g.edges.size() > max_edges || g.edges.size() > 40) {
    throw SizeGuardExceeded("orientation oracle limited to " +
                            std::to_string(std::min<std::size_t>(max_edges, 40)) + " edges (got " +
                            std::to_string(g.edges.size()) + ")");
  }
  if (g.n > 32) throw SizeGuardExceeded("orientation oracle limited to 32 vertices");
  adjacency_of(g);  // validates the edge list
  const Mask everyone = g.n == 32 ? ~Mask{0} : (Mask{1} << g.n) - 1;
  const std::uint64_t orientations = std::uint64_t{1} << g.edges.size();
  std::uint64_t acyclic = 0;
  std::vector<Mask> in(g.n);
  for (std::uint64_t o = 0; o < orientations; ++o) {
    std::fill(in.begin(), in.end(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      if (o >> e & 1) std::swap(u, v);
      in[v] |= Mask{1} << u;  // u -> v
    }
    // Peel vertices with no remaining in-neighbour; a stall means a directed cycle.
    Mask remaining = everyone;
    bool progress = true;
    while (remaining != 0 && progress) {
      progress = false;
      for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((in[v] & remaining) == 0) {
          remaining &= ~(Mask{1} << v);
          progress = true;
        }
      }
    }
    acyclic += remaining == 0 ? 1 : 0;
  }
  return acyclic;
}

}  // namespace biclique::oracle
