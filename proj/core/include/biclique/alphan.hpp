#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "biclique/errors.hpp"
#include "biclique/graph.hpp"
#include "biclique/poly.hpp"

namespace biclique {

/// x^3 + a2 x^2 + a1 x + a0 with a2 in {-1, 0, 1}.
struct ReducedCubic {
  int a2 = 0;
  Integer a1 = 0;
  Integer a0 = 0;

  /// Throws InvalidInput when a2 is outside {-1, 0, 1}.
  ReducedCubic(int a2, Integer a1, Integer a0);

  IntPoly poly() const;
};

struct Reduction {
  ReducedCubic cubic;
  Integer n0;  // q(x) = cubic(x + n0)
};

/// Position of the deterministic feasibility scan when it stopped.
/// case_id is 1, 2 or 3 for x^2 coefficient -1, 0, 1.
struct ScanState {
  int case_id = 0;
  Integer t = 0;
  Integer i = 0;
};

struct ScanOptions {
  /// Upper bound on t (cases 1, 2) or |t| (case 3).
  std::int64_t max_t = 10'000;
};

class SearchFailure : public Error {
 public:
  SearchFailure(const std::string& what, ScanState last) : Error(what), last_state(std::move(last)) {}
  ScanState last_state;
};

struct AlphaNResult {
  ThreeCliqueParams params;
  Integer n = 0;   // case-level shift: g(x) = reduced(x - n)
  Integer n0 = 0;  // reduction shift: q(x) = reduced(x + n0)
  Integer N = 0;   // n0 + n: g(x) = q(x - N)
  ScanState state;
  IntPoly reduced;  // the reduced cubic p
  IntPoly target;   // the input q (equal to `reduced` for construct_case)
  IntPoly g;        // interesting factor of the constructed biclique
  bool verified = false;

  Integer k() const { return params.k(); }
};

/// Unique n0 with a2 - 3 n0 in {-1, 0, 1}; the reduced cubic is q(x - n0).
/// Throws InvalidInput unless q is a monic cubic.
Reduction reduce_cubic(const IntPoly& q);

/// The six counts assigned by the case formulas for the given (i, n). For
/// every integer i and n, interesting_factor_3k of the result equals
/// p(x - n); feasibility (all counts >= 0) is a separate question.
ThreeCliqueParams case_parameters(const ReducedCubic& p, const Integer& i, const Integer& n);

/// Scans the free parameters in a fixed order and returns the first
/// assignment with all six counts >= 0, n >= 2i + 3 and n >= min_n.
/// Cases 1 and 2 take t = 0, 1, 2, ... and, for each t, the smallest i >= 0
/// (n = ceil(-a0/2) + 2i + t, resp. n = -a0 + 3i + t). Case 3 takes
/// t = 0, -1, -2, ..., i = floor(a0/2) - t and the smallest feasible n.
/// Throws SearchFailure when the cap is exhausted and FormulaIntegrityError
/// if the exact identity check fails.
AlphaNResult construct_case(const ReducedCubic& p, const Integer& min_n,
                            const ScanOptions& options = {});

/// For a monic integer cubic q: a (3,k)-biclique whose interesting factor is
/// q(x - N) with N >= 0, so every root alpha of q gives a chromatic root alpha + N.
AlphaNResult alpha_plus_n(const IntPoly& q, const ScanOptions& options = {});

/// Floating-point check of a result: each root of the target cubic, shifted by
/// N, is plugged into P_G(x) = (x)_k g(x). Magnitudes are kept as base-10
/// logarithms since (x)_k overflows long double for large k.
struct RootResidual {
  std::complex<long double> root;     // alpha, a root of the target cubic
  long double log10_residual = 0;     // log10 |P_G(alpha + N)|
  long double log10_scale = 0;        // log10 max(1, largest |coefficient| of P_G)

  /// |P_G(alpha + N)| < tolerance * max(1, coefficient scale).
  bool within(long double tolerance) const {
    return log10_residual < std::log10(tolerance) + log10_scale;
  }
};

std::vector<RootResidual> root_residuals(const AlphaNResult& result);

}  // namespace biclique
