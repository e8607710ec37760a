#include "biclique/graph.hpp"

#include <algorithm>
#include <sstream>

#include "biclique/errors.hpp"

namespace biclique {

BicliqueSpec::BicliqueSpec(int j, int k, std::vector<ComplementEdge> complement_edges)
    : j_(j), k_(k), edges_(std::move(complement_edges)) {
  if (j_ < 1 || k_ < 1) {
    throw InvalidInput("biclique sides must be at least 1 (got j=" + std::to_string(j_) +
                       ", k=" + std::to_string(k_) + ")");
  }
  for (const auto& [l, r] : edges_) {
    if (l < 0 || l >= j_ || r < 0 || r >= k_) {
      throw InvalidInput("complement edge (" + std::to_string(l) + "," + std::to_string(r) +
                         ") out of range for K_{" + std::to_string(j_) + "," +
                         std::to_string(k_) + "}");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InvalidInput("duplicate complement edge (" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + ")");
  }
}

std::size_t BicliqueSpec::bridging_size() const {
  return static_cast<std::size_t>(j_) * static_cast<std::size_t>(k_) - edges_.size();
}

bool BicliqueSpec::has_complement_edge(int left, int right) const {
  return std::binary_search(edges_.begin(), edges_.end(), ComplementEdge{left, right});
}

int BicliqueSpec::left_degree(int left) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [&](const auto& e) { return e.first == left; }));
}

int BicliqueSpec::right_degree(int right) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [&](const auto& e) { return e.second == right; }));
}

bool BicliqueSpec::is_strict() const {
  std::vector<bool> left(j_, false), right(k_, false);
  for (const auto& [l, r] : edges_) {
    left[l] = true;
    right[r] = true;
  }
  return std::all_of(left.begin(), left.end(), [](bool b) { return b; }) &&
         std::all_of(right.begin(), right.end(), [](bool b) { return b; });
}

BicliqueSpec BicliqueSpec::swapped() const {
  std::vector<ComplementEdge> flipped;
  flipped.reserve(edges_.size());
  for (const auto& [l, r] : edges_) flipped.emplace_back(r, l);
  return BicliqueSpec(k_, j_, std::move(flipped));
}

Integer ThreeCliqueParams::k() const {
  Integer sum = 0;
  for (const auto& v : values) sum += v;
  return sum;
}

bool ThreeCliqueParams::all_non_negative() const {
  return std::all_of(values.begin(), values.end(), [](const Integer& v) { return v >= 0; });
}

std::string ThreeCliqueParams::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].get_str();
  os << ')';
  return os.str();
}

BicliqueSpec from_params(const ThreeCliqueParams& params) {
  if (!params.all_non_negative()) {
    throw InvalidInput("parameter tuple " + params.to_string() + " has a negative count");
  }
  const Integer k = params.k();
  if (k == 0) throw DegenerateParameters("parameter tuple (0,0,0,0,0,0) gives k = 0");
  if (k > kMaxMaterializedClique) {
    throw InvalidInput("parameter tuple " + params.to_string() + " is too large to materialize");
  }
  // Complement neighbours of each block: G-neighbourhood {v1} means the
  // complement joins v2 and v3, and so on.
  static constexpr std::array<std::array<int, 2>, 6> kComplementTargets{{
      {1, 2},   // a: adjacent in G to v1 only
      {0, 2},   // b: v2 only
      {0, 1},   // c: v3 only
      {0, -1},  // d: v2 and v3
      {1, -1},  // e: v1 and v3
      {2, -1},  // f: v1 and v2
  }};
  std::vector<ComplementEdge> edges;
  int right = 0;
  for (std::size_t block = 0; block < 6; ++block) {
    const long count = params.values[block].get_si();
    for (long r = 0; r < count; ++r, ++right) {
      for (int left : kComplementTargets[block]) {
        if (left >= 0) edges.emplace_back(left, right);
      }
    }
  }
  return BicliqueSpec(3, static_cast<int>(k.get_si()), std::move(edges));
}

BicliqueSpec complement_partner(const BicliqueSpec& spec) {
  std::vector<ComplementEdge> edges;
  edges.reserve(spec.bridging_size());
  for (int l = 0; l < spec.j(); ++l) {
    for (int r = 0; r < spec.k(); ++r) {
      if (!spec.has_complement_edge(l, r)) edges.emplace_back(l, r);
    }
  }
  return BicliqueSpec(spec.j(), spec.k(), std::move(edges));
}

StripResult strip_universal(const BicliqueSpec& spec) {
  std::vector<int> left_map(spec.j(), -1), right_map(spec.k(), -1);
  for (const auto& [l, r] : spec.complement_edges()) {
    left_map[l] = 0;
    right_map[r] = 0;
  }
  // Removing isolated complement vertices leaves every other degree unchanged,
  // so one pass reaches the fixed point.
  StripResult out;
  int next = 0;
  for (int& slot : left_map) {
    if (slot == 0) {
      slot = next++;
    } else {
      ++out.p_left;
    }
  }
  const int kept_left = next;
  next = 0;
  for (int& slot : right_map) {
    if (slot == 0) {
      slot = next++;
    } else {
      ++out.p_right;
    }
  }
  const int kept_right = next;
  if (kept_left == 0 || kept_right == 0) return out;

  std::vector<ComplementEdge> edges;
  edges.reserve(spec.complement_size());
  for (const auto& [l, r] : spec.complement_edges()) edges.emplace_back(left_map[l], right_map[r]);
  out.reduced.emplace(kept_left, kept_right, std::move(edges));
  return out;
}

SimpleGraph to_simple_graph(const BicliqueSpec& spec) {
  SimpleGraph g;
  const int j = spec.j();
  g.n = spec.order();
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      const bool same_side = (u < j) == (v < j);
      if (same_side || !spec.has_complement_edge(u, v - j)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

}  // namespace biclique
