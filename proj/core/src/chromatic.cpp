#include "biclique/chromatic.hpp"

#include <algorithm>

#include "biclique/errors.hpp"

namespace biclique {

IntPoly chromatic_polynomial(const BicliqueSpec& spec) {
  const MatchingNumbers m = matching_numbers(spec);
  const std::size_t n = static_cast<std::size_t>(spec.order());
  IntPoly out;
  for (std::size_t i = 0; i < m.counts.size(); ++i) {
    if (m.counts[i] != 0) out += falling_factorial(n - i) * m.counts[i];
  }
  return out;
}

int factored_clique_size(const BicliqueSpec& spec) { return std::max(spec.j(), spec.k()); }

IntPoly interesting_factor(const BicliqueSpec& spec) {
  return left_clique_factor(spec.normalized());
}

IntPoly left_clique_factor(const BicliqueSpec& spec) {
  const MatchingNumbers m = matching_numbers(spec);
  const std::size_t j = static_cast<std::size_t>(spec.j());
  const Integer k = spec.k();
  IntPoly out;
  for (std::size_t i = 0; i <= j; ++i) {
    if (m.at(i) != 0) out += falling_factorial(j - i, k) * m.at(i);
  }
  return out;
}

IntPoly interesting_factor_3k(const ThreeCliqueParams& p) {
  const Integer& a = p.a();
  const Integer& b = p.b();
  const Integer& c = p.c();
  const Integer& d = p.d();
  const Integer& e = p.e();
  const Integer& f = p.f();
  // Colour-class blockers of v1, v2, v3 and of the merged pairs.
  const IntPoly v1 = IntPoly::linear_factor(a + e + f);
  const IntPoly v2 = IntPoly::linear_factor(b + d + f);
  const IntPoly v3 = IntPoly::linear_factor(c + d + e);
  const IntPoly v12 = IntPoly::linear_factor(a + b + d + e + f);
  const IntPoly v13 = IntPoly::linear_factor(a + c + d + e + f);
  const IntPoly v23 = IntPoly::linear_factor(b + c + d + e + f);
  const IntPoly v123 = IntPoly::linear_factor(p.k());
  return v1 * v2 * v3 - v12 * v3 - v13 * v2 - v23 * v1 + v123 * Integer(2);
}

Integer acyclic_count(const BicliqueSpec& spec) {
  const Integer value = eval_int(chromatic_polynomial(spec), -1);
  return spec.order() % 2 == 0 ? value : Integer(-value);
}

bool reflection_count_identity(const BicliqueSpec& g_spec, const BicliqueSpec& h_spec,
                               const Integer& c) {
  const BicliqueSpec g = g_spec.normalized();
  const BicliqueSpec h = h_spec.normalized();
  if (g.j() != h.j()) {
    throw InvalidInput("reflection_count_identity: both bicliques need the same smaller side");
  }
  const Integer lhs = eval_int(chromatic_polynomial(g), c + 1);
  const Integer ph = eval_int(chromatic_polynomial(h), -1);
  const Integer signed_ph = (g.j() + h.k()) % 2 == 0 ? ph : Integer(-ph);
  if (g.k() == h.k()) {
    // C(c+1, k) as the generalized binomial (c+1)_k / k!, exact for any integer c.
    const Integer choose = falling_value(c + 1, g.k()) / factorial(g.k());
    return lhs == choose * signed_ph;
  }
  return factorial(h.k()) * lhs == falling_value(c + 1, g.k()) * signed_ph;
}

}  // namespace biclique
