#include "biclique/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "biclique/chromatic.hpp"
#include "biclique/errors.hpp"

namespace biclique {

namespace {

constexpr int kMaxAtlasSide = 8;

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t l = 0; l < perm.size(); ++l) {
    if (mask >> l & 1) out |= std::uint32_t{1} << perm[l];
  }
  return out;
}

std::vector<std::uint32_t> canonical_from_masks(int j, const std::vector<std::uint32_t>& masks) {
  std::vector<int> perm(j);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> candidate(masks.size());
  do {
    for (std::size_t r = 0; r < masks.size(); ++r) candidate[r] = permute_mask(masks[r], perm);
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<std::uint32_t> canonical_masks(const BicliqueSpec& spec) {
  if (spec.j() > kMaxAtlasSide) throw InvalidInput("canonical form limited to j <= 8");
  std::vector<std::uint32_t> masks(spec.k(), 0);
  for (const auto& [l, r] : spec.complement_edges()) masks[r] |= std::uint32_t{1} << l;
  return canonical_from_masks(spec.j(), masks);
}

std::string canonical_id(const BicliqueSpec& spec) {
  std::ostringstream os;
  os << spec.j() << 'x' << spec.k() << ':';
  const auto masks = canonical_masks(spec);
  for (std::size_t r = 0; r < masks.size(); ++r) os << (r ? "." : "") << std::hex << masks[r];
  return os.str();
}

BicliqueSpec spec_from_masks(int j, const std::vector<std::uint32_t>& masks) {
  std::vector<ComplementEdge> edges;
  for (std::size_t r = 0; r < masks.size(); ++r) {
    for (int l = 0; l < j; ++l) {
      if (masks[r] >> l & 1) edges.emplace_back(l, static_cast<int>(r));
    }
  }
  return BicliqueSpec(j, static_cast<int>(masks.size()), std::move(edges));
}

std::vector<BicliqueSpec> distinct_bicliques(int j, int k, int max_bits) {
  if (j < 1 || k < 1) throw InvalidInput("distinct_bicliques: j and k must be >= 1");
  if (j > kMaxAtlasSide) throw InvalidInput("distinct_bicliques: j limited to 8");
  if (static_cast<long>(j) * k > max_bits) {
    throw InvalidInput("distinct_bicliques: j*k = " + std::to_string(j * k) +
                       " exceeds the enumeration limit " + std::to_string(max_bits));
  }
  // A subset is a multiset of right-vertex masks; enumerate non-decreasing
  // mask sequences instead of all 2^{jk} edge subsets.
  const std::uint32_t mask_count = std::uint32_t{1} << j;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> masks(k, 0);
  auto fill = [&](auto&& self, int pos, std::uint32_t from) -> void {
    if (pos == k) {
      seen.insert(canonical_from_masks(j, masks));
      return;
    }
    for (std::uint32_t m = from; m < mask_count; ++m) {
      masks[pos] = m;
      self(self, pos + 1, m);
    }
  };
  fill(fill, 0, 0);
  std::vector<BicliqueSpec> out;
  out.reserve(seen.size());
  for (const auto& canon : seen) out.push_back(spec_from_masks(j, canon));
  return out;
}

std::vector<AtlasRow> build_atlas(int j, int k_max, int max_bits) {
  std::vector<AtlasRow> rows;
  struct Representative {
    std::size_t degree;
    IntPoly factor;
    int class_id;
  };
  std::vector<Representative> reps;
  for (int k = 1; k <= k_max; ++k) {
    for (const BicliqueSpec& spec : distinct_bicliques(j, k, max_bits)) {
      AtlasRow row;
      row.j = j;
      row.k = k;
      row.canonical_id = canonical_id(spec);
      row.factor = interesting_factor(spec);
      const std::size_t degree = row.factor.degree();
      bool placed = false;
      for (const auto& rep : reps) {
        if (rep.degree != degree) continue;
        const RelationReport rel = relate(row.factor, rep.factor);
        if (rel.kind == RelationKind::kNone) continue;
        row.class_id = rep.class_id;
        row.relation = rel.kind;
        row.shift = rel.shift;
        placed = true;
        break;
      }
      if (!placed) {
        row.class_id = static_cast<int>(reps.size());
        reps.push_back({degree, row.factor, row.class_id});
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_atlas_csv(std::ostream& out, const std::vector<AtlasRow>& rows) {
  out << "j,k,canonical_id,factor,class_id,relation,shift\n";
  for (const auto& row : rows) {
    out << row.j << ',' << row.k << ',' << row.canonical_id << ',';
    const auto& c = row.factor.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i].get_str();
    out << ',' << row.class_id << ','
        << (row.relation == RelationKind::kNone ? std::string("representative")
                                                : to_string(row.relation))
        << ',' << (row.relation == RelationKind::kNone ? std::string() : row.shift.get_str())
        << '\n';
  }
}

}  // namespace biclique
