#include "biclique/reflect.hpp"

#include "biclique/errors.hpp"

namespace biclique {

namespace {

std::size_t common_degree(const IntPoly& g, const IntPoly& h) {
  if (!g.is_monic() || !h.is_monic()) throw InvalidInput("relation search needs monic polynomials");
  const std::size_t j = g.degree();
  if (j != h.degree()) {
    throw InvalidInput("relation search needs equal degrees (got " + std::to_string(j) + " and " +
                       std::to_string(h.degree()) + ")");
  }
  if (j == 0) throw InvalidInput("relation search needs degree >= 1");
  return j;
}

std::optional<Integer> exact_quotient(const Integer& numerator, std::size_t denominator) {
  const Integer den = static_cast<unsigned long>(denominator);
  if (!mpz_divisible_p(numerator.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  return Integer(numerator / den);
}

void require_non_negative(const FamilyPair& pair, const char* constraint) {
  if (!pair.g.all_non_negative() || !pair.h.all_non_negative()) {
    throw InfeasibleFamily(std::string("family constraint ") + constraint +
                           " forces a negative count: G=" + pair.g.to_string() +
                           " H=" + pair.h.to_string());
  }
  if (pair.g.k() == 0 || pair.h.k() == 0) {
    throw InfeasibleFamily("family parameters give an empty clique");
  }
}

void require_naturals(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  if (r < 0 || s < 0 || t < 0 || u < 0) {
    throw InvalidInput("family parameters r, s, t, u must be non-negative");
  }
}

void flag_convention(FamilyPair& pair) { pair.below_convention = pair.g.k() < 3 || pair.h.k() < 3; }

}  // namespace

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::kTranslation:
      return "translation";
    case RelationKind::kReflection:
      return "reflection";
    case RelationKind::kNone:
      break;
  }
  return "none";
}

std::optional<Integer> find_translation(const IntPoly& g, const IntPoly& h) {
  const std::size_t j = common_degree(g, h);
  // h(x + d) has x^{j-1} coefficient h_{j-1} + j d.
  auto d = exact_quotient(g.coeff(j - 1) - h.coeff(j - 1), j);
  if (!d || shift_poly(h, *d) != g) return std::nullopt;
  return d;
}

std::optional<Integer> find_reflection(const IntPoly& g, const IntPoly& h) {
  const std::size_t j = common_degree(g, h);
  // (-1)^j h(-x + c) has x^{j-1} coefficient -(h_{j-1} + j c).
  auto c = exact_quotient(-(g.coeff(j - 1) + h.coeff(j - 1)), j);
  if (!c || reflect_poly(h, *c) != g) return std::nullopt;
  return c;
}

RelationReport relate(const IntPoly& g, const IntPoly& h) {
  if (auto d = find_translation(g, h)) return {RelationKind::kTranslation, *d, true};
  if (auto c = find_reflection(g, h)) return {RelationKind::kReflection, *c, true};
  return {};
}

FamilyPair prop5_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  require_naturals(r, s, t, u);
  const Integer R = r, S = s, T = t, U = u;
  FamilyPair pair;
  pair.proposition = 5;
  pair.v = 4 * T - R - S + 3 - U;
  pair.g = ThreeCliqueParams(R, S, T, T, T, U);
  pair.h = ThreeCliqueParams(R, S, T, T, T, pair.v);
  pair.c = 6 * T + 4;
  require_non_negative(pair, "u + v = 4t - r - s + 3");
  flag_convention(pair);
  return pair;
}

FamilyPair prop6_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  require_naturals(r, s, t, u);
  const Integer R = r, S = s, T = t, U = u;
  FamilyPair pair;
  pair.proposition = 6;
  pair.v = 4 * T - 2 * R + 4 - U;
  pair.g = ThreeCliqueParams(R, R + S - 1, T, T, S + T, U);
  pair.h = ThreeCliqueParams(R, R + S - 1, T, T, S + T, pair.v);
  pair.c = 2 * S + 6 * T + 4;
  require_non_negative(pair, "u + v = 4t - 2r + 4");
  flag_convention(pair);
  return pair;
}

FamilyPair prop7_pair(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  require_naturals(r, s, t, u);
  const Integer R = r, S = s, T = t, U = u;
  FamilyPair pair;
  pair.proposition = 7;
  pair.v = 4 * S - 2 * R + T * T + 2 * T + 4 - U;
  const Integer d = S + T * (T + 1) / 2;
  const Integer e = S + (T + 1) * (T + 2) / 2;
  pair.g = ThreeCliqueParams(R, R, S, d, e, U);
  pair.h = ThreeCliqueParams(R, R, S, d, e, pair.v);
  pair.c = 6 * S + 2 * T * T + 4 * T + 6;
  require_non_negative(pair, "u + v = 4s - 2r + t^2 + 2t + 4");
  flag_convention(pair);
  return pair;
}

FamilyPair family_pair(int proposition, std::int64_t r, std::int64_t s, std::int64_t t,
                       std::int64_t u) {
  switch (proposition) {
    case 5:
      return prop5_pair(r, s, t, u);
    case 6:
      return prop6_pair(r, s, t, u);
    case 7:
      return prop7_pair(r, s, t, u);
    default:
      throw InvalidInput("family: proposition must be 5, 6 or 7 (got " +
                         std::to_string(proposition) + ")");
  }
}

}  // namespace biclique
