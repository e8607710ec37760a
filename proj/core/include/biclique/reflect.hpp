#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "biclique/graph.hpp"
#include "biclique/poly.hpp"

namespace biclique {

enum class RelationKind { kTranslation, kReflection, kNone };

std::string to_string(RelationKind kind);

/// Outcome of comparing two interesting factors. `shift` is d for a
/// translation g(x) = h(x + d) and c for a reflection g(x) = (-1)^j h(-x + c).
struct RelationReport {
  RelationKind kind = RelationKind::kNone;
  Integer shift = 0;
  bool verified = false;
};

/// d with g(x) = h(x + d), if any. The only candidate is read off the
/// x^{j-1} coefficients and then checked in full. Throws InvalidInput unless
/// g and h are monic of the same degree j >= 1.
std::optional<Integer> find_translation(const IntPoly& g, const IntPoly& h);

/// c with g(x) = (-1)^j h(-x + c), if any; same candidate-then-verify scheme.
std::optional<Integer> find_reflection(const IntPoly& g, const IntPoly& h);

/// Translation is tried first, then reflection.
RelationReport relate(const IntPoly& g, const IntPoly& h);

/// A generated pair of (3,k)-bicliques with reflected interesting factors.
struct FamilyPair {
  int proposition = 0;
  ThreeCliqueParams g;
  ThreeCliqueParams h;
  Integer c;
  Integer v;  // the partner count forced by the family constraint
  /// True when one of the cliques has k < 3, outside the usual j <= k reading.
  bool below_convention = false;
};

/// G = (r,s,t,t,t,u), H = (r,s,t,t,t,v), u + v = 4t - r - s + 3, c = 6t + 4.
FamilyPair prop5_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u);

/// G = (r, r+s-1, t, t, s+t, u), u + v = 4t - 2r + 4, c = 2s + 6t + 4.
FamilyPair prop6_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u);

/// G = (r, r, s, s + C(t+1,2), s + C(t+2,2), u), u + v = 4s - 2r + t^2 + 2t + 4,
/// c = 6s + 2t^2 + 4t + 6.
FamilyPair prop7_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u);

/// Dispatches on proposition 5, 6 or 7; throws InvalidInput otherwise.
FamilyPair family_pair(int proposition, std::int64_t r, std::int64_t s, std::int64_t t,
                       std::int64_t u);

}  // namespace biclique
