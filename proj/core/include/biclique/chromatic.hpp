#pragma once

#include "biclique/graph.hpp"
#include "biclique/matchings.hpp"
#include "biclique/poly.hpp"

namespace biclique {

/// P_G(x) = sum_i m^i (x)_{j+k-i}, with m the complement matching numbers.
IntPoly chromatic_polynomial(const BicliqueSpec& spec);

/// sum_i m^i (x - k)_{j-i}: the factor left after taking out the k-clique,
/// without normalizing sides. P_G(x) = (x)_k times this for any j, k.
IntPoly left_clique_factor(const BicliqueSpec& spec);

/// Degree-min(j,k) factor g with P_G(x) = (x)_K g(x), K = max(j,k). Built as
/// sum_i m^i (x - K)_{min(j,k) - i}; never by division.
IntPoly interesting_factor(const BicliqueSpec& spec);

/// Size of the clique factored out by interesting_factor, i.e. max(j,k).
int factored_clique_size(const BicliqueSpec& spec);

/// Inclusion-exclusion form of the (3,k) interesting factor:
///   (x-a-e-f)(x-b-d-f)(x-c-d-e) - (x-a-b-d-e-f)(x-c-d-e)
///   - (x-a-c-d-e-f)(x-b-d-f) - (x-b-c-d-e-f)(x-a-e-f) + 2(x-a-b-c-d-e-f).
/// Works on arbitrary integer tuples; no graph is materialized.
IntPoly interesting_factor_3k(const ThreeCliqueParams& params);

/// (-1)^{j+k} P_G(-1): the number of acyclic orientations of G.
Integer acyclic_count(const BicliqueSpec& spec);

/// Evaluates P_G(c+1) = C(c+1, k) (-1)^{j+k} P_H(-1) exactly. Both specs are
/// normalized (j <= k) and must share j. When the clique sizes differ the
/// equivalent form kH! P_G(c+1) = (c+1)_{kG} (-1)^{j+kH} P_H(-1) is checked.
bool reflection_count_identity(const BicliqueSpec& g_spec, const BicliqueSpec& h_spec,
                               const Integer& c);

}  // namespace biclique
