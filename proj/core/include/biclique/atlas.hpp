#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "biclique/graph.hpp"
#include "biclique/poly.hpp"
#include "biclique/reflect.hpp"

namespace biclique {

/// Canonical form of a complement graph under permutations that keep each
/// side in place: the lexicographically least sorted list of right-vertex
/// neighbourhood masks over all orderings of the left side.
std::vector<std::uint32_t> canonical_masks(const BicliqueSpec& spec);
std::string canonical_id(const BicliqueSpec& spec);

/// Rebuilds a spec from right-vertex neighbourhood masks over j left vertices.
BicliqueSpec spec_from_masks(int j, const std::vector<std::uint32_t>& masks);

/// Every complement-edge subset of K_{j,k}, one representative per canonical
/// form, in ascending canonical order. Throws InvalidInput when j*k > max_bits.
std::vector<BicliqueSpec> distinct_bicliques(int j, int k, int max_bits = 24);

struct AtlasRow {
  int j = 0;
  int k = 0;
  std::string canonical_id;
  IntPoly factor;
  int class_id = 0;
  /// kNone marks the representative of its class.
  RelationKind relation = RelationKind::kNone;
  Integer shift = 0;
};

/// All bicliques with the given j and 1 <= k <= k_max, grouped into classes of
/// interesting factors related by a translation or a reflection. Rows are
/// ordered by k, then canonical id; class ids follow first appearance.
std::vector<AtlasRow> build_atlas(int j, int k_max, int max_bits = 24);

/// Columns: j,k,canonical_id,factor,class_id,relation,shift. The factor is
/// written as space-separated coefficients, constant term first.
void write_atlas_csv(std::ostream& out, const std::vector<AtlasRow>& rows);

}  // namespace biclique
