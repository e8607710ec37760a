#include "biclique/alphan.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include <unsupported/Eigen/Polynomials>

#include "biclique/chromatic.hpp"

namespace biclique {

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer square(const Integer& v) { return v * v; }

// Values that must all be >= 0, as functions of one free integer variable.
// Every such value is affine in the variable, so the feasible set is an
// interval and its least element is the first hit of an ascending scan.
constexpr std::size_t kConstraints = 8;
using ConstraintValues = std::array<Integer, kConstraints>;

std::optional<Integer> least_feasible(const std::function<ConstraintValues(const Integer&)>& at,
                                      const Integer& lower_bound) {
  const ConstraintValues v0 = at(lower_bound);
  const ConstraintValues v1 = at(lower_bound + 1);
  const ConstraintValues v2 = at(lower_bound + 2);
  Integer lo = lower_bound;
  std::optional<Integer> hi;
  for (std::size_t idx = 0; idx < kConstraints; ++idx) {
    const Integer slope = v1[idx] - v0[idx];
    if (v2[idx] - v1[idx] != slope) {
      throw FormulaIntegrityError("case parameter is not affine in the scanned variable");
    }
    // v0 + slope * (x - lower_bound) >= 0
    if (slope == 0) {
      if (v0[idx] < 0) return std::nullopt;
    } else if (slope > 0) {
      lo = std::max(lo, Integer(lower_bound + ceil_div(-v0[idx], slope)));
    } else {
      const Integer top = lower_bound + floor_div(v0[idx], -slope);
      hi = hi ? std::min(*hi, top) : top;
    }
  }
  if (hi && lo > *hi) return std::nullopt;
  return lo;
}

ConstraintValues constraint_values(const ThreeCliqueParams& params, const Integer& n,
                                   const Integer& min_n) {
  ConstraintValues out;
  std::copy(params.values.begin(), params.values.end(), out.begin());
  out[6] = n - min_n;
  out[7] = n;
  return out;
}

void certify(AlphaNResult& result, const IntPoly& expected, const char* what) {
  result.g = interesting_factor_3k(result.params);
  if (result.g != expected) {
    throw FormulaIntegrityError(std::string(what) + ": parameters " + result.params.to_string() +
                                " give " + result.g.to_string() + ", expected " +
                                expected.to_string());
  }
  result.verified = true;
}

long double log10_abs(const Integer& v) {
  if (v == 0) return -std::numeric_limits<long double>::infinity();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(std::fabs(static_cast<long double>(mant))) +
         static_cast<long double>(exp2) * std::log10(2.0L);
}

}  // namespace

ReducedCubic::ReducedCubic(int a2_, Integer a1_, Integer a0_)
    : a2(a2_), a1(std::move(a1_)), a0(std::move(a0_)) {
  if (a2 < -1 || a2 > 1) {
    throw InvalidInput("reduced cubic needs x^2 coefficient in {-1, 0, 1} (got " +
                       std::to_string(a2) + ")");
  }
}

IntPoly ReducedCubic::poly() const { return IntPoly(std::vector<Integer>{a0, a1, Integer(a2), 1}); }

Reduction reduce_cubic(const IntPoly& q) {
  if (q.is_zero() || q.degree() != 3 || !q.is_monic()) {
    throw InvalidInput("reduce_cubic needs a monic cubic, got " + q.to_string());
  }
  const Integer n0 = floor_div(q.coeff(2) + 1, 3);
  const IntPoly reduced = shift_poly(q, -n0);
  return {ReducedCubic(static_cast<int>(reduced.coeff(2).get_si()), reduced.coeff(1),
                       reduced.coeff(0)),
          n0};
}

ThreeCliqueParams case_parameters(const ReducedCubic& p, const Integer& i, const Integer& n) {
  const Integer& a0 = p.a0;
  const Integer& a1 = p.a1;
  const Integer b = n - 2 * i - 3;
  const Integer d = i + 1;
  const Integer& f = i;
  switch (p.a2) {
    case -1: {
      const Integer sq = square(2 * n + a0);
      const Integer i2 = 16 * i * i;
      return {sq - 11 * a0 + 35 + a1 - (8 * a0 - 45) * i - (16 * i + 24) * n + i2,
              b,
              sq - 13 * a0 + 46 + a1 - (8 * a0 - 53) * i - (16 * i + 28) * n + i2,
              d,
              -sq + 12 * a0 - 41 - a1 + (8 * a0 - 50) * i + (16 * i + 27) * n - i2,
              f};
    }
    case 0: {
      const Integer sq = square(n + a0);
      const Integer i2 = 9 * i * i;
      return {sq + a1 + 14 + 19 * i + i2 - (6 * i + 8) * n - (6 * i + 6) * a0,
              b,
              sq + a1 + 20 + 25 * i + i2 - (6 * i + 10) * n - (6 * i + 8) * a0,
              d,
              -sq - a1 - 18 - 23 * i - i2 + (6 * i + 10) * n + (6 * i + 7) * a0,
              f};
    }
    default: {
      const Integer sq = a0 * a0;
      const Integer i2 = 4 * i * i;
      return {sq + 5 - a0 + a1 + (3 - 4 * a0) * i - 2 * n + i2,
              b,
              sq + 6 - 3 * a0 + a1 + (7 - 4 * a0) * i - 2 * n + i2,
              d,
              -sq - 7 + 2 * a0 - a1 - (6 - 4 * a0) * i + 3 * n - i2,
              f};
    }
  }
}

AlphaNResult construct_case(const ReducedCubic& p, const Integer& min_n, const ScanOptions& options) {
  ScanState state;
  state.case_id = p.a2 + 2;
  std::optional<AlphaNResult> found;

  for (std::int64_t step = 0; step <= options.max_t && !found; ++step) {
    if (p.a2 != 1) {
      // Cases 1 and 2: n is tied to (i, t); scan i upward for fixed t.
      const Integer t = step;
      const Integer base = p.a2 == -1 ? Integer(-floor_div(p.a0, 2) + t) : Integer(-p.a0 + t);
      const int i_step = p.a2 == -1 ? 2 : 3;
      auto n_of = [&](const Integer& i) { return Integer(base + i_step * i); };
      state.t = t;
      auto i = least_feasible(
          [&](const Integer& iv) {
            const Integer n = n_of(iv);
            return constraint_values(case_parameters(p, iv, n), n, min_n);
          },
          0);
      if (!i) continue;
      state.i = *i;
      AlphaNResult r;
      r.n = n_of(*i);
      r.params = case_parameters(p, *i, r.n);
      r.state = state;
      found = std::move(r);
    } else {
      // Case 3: t runs over 0, -1, -2, ...; i follows t and n is scanned.
      const Integer t = -step;
      const Integer i = floor_div(p.a0, 2) - t;
      state.t = t;
      state.i = i;
      if (i < 0) continue;
      auto n = least_feasible(
          [&](const Integer& nv) { return constraint_values(case_parameters(p, i, nv), nv, min_n); },
          0);
      if (!n) continue;
      AlphaNResult r;
      r.n = *n;
      r.params = case_parameters(p, i, *n);
      r.state = state;
      found = std::move(r);
    }
  }
  if (!found) {
    throw SearchFailure("alpha+n scan exhausted |t| <= " + std::to_string(options.max_t) +
                            " for " + p.poly().to_string(),
                        state);
  }
  AlphaNResult& r = *found;
  if (!r.params.all_non_negative() || r.n < min_n || r.params.b() < 0) {
    throw FormulaIntegrityError("scan returned an infeasible assignment " + r.params.to_string());
  }
  r.reduced = p.poly();
  r.target = r.reduced;
  r.N = r.n;
  certify(r, shift_poly(r.reduced, -r.n), "construct_case");
  return std::move(r);
}

AlphaNResult alpha_plus_n(const IntPoly& q, const ScanOptions& options) {
  const Reduction red = reduce_cubic(q);
  const Integer min_n = red.n0 < 0 ? Integer(-red.n0) : Integer(0);
  AlphaNResult r = construct_case(red.cubic, min_n, options);
  r.n0 = red.n0;
  r.N = red.n0 + r.n;
  r.target = q;
  certify(r, shift_poly(q, -r.N), "alpha_plus_n");
  return r;
}

std::vector<RootResidual> root_residuals(const AlphaNResult& result) {
  using Real = long double;
  using Complex = std::complex<Real>;
  const IntPoly& q = result.target;
  Eigen::Matrix<Real, 4, 1> coeffs;
  for (int i = 0; i < 4; ++i) coeffs[i] = static_cast<Real>(q.coeff(i).get_d());
  Eigen::PolynomialSolver<Real, 3> solver(coeffs);

  auto horner = [](const IntPoly& p, const Complex& z) {
    Complex acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + static_cast<Real>(c[i].get_d());
    return acc;
  };
  const IntPoly dq = IntPoly(std::vector<Integer>{q.coeff(1), 2 * q.coeff(2), 3 * q.coeff(3)});

  const long k = result.k().get_si();
  const IntPoly pg = falling_factorial(static_cast<std::size_t>(k)) * result.g;
  Real log_scale = 0;
  for (const auto& c : pg.coefficients()) log_scale = std::max(log_scale, log10_abs(c));

  std::vector<RootResidual> out;
  for (Eigen::Index r = 0; r < solver.roots().size(); ++r) {
    Complex alpha = solver.roots()[r];
    for (int iter = 0; iter < 8; ++iter) {  // Newton polish
      const Complex d = horner(dq, alpha);
      if (d == Complex(0)) break;
      alpha -= horner(q, alpha) / d;
    }
    const Complex z = alpha + static_cast<Real>(result.N.get_d());
    Real log_res = std::log10(std::abs(horner(result.g, z)));
    for (long m = 0; m < k; ++m) log_res += std::log10(std::abs(z - static_cast<Real>(m)));
    out.push_back({alpha, log_res, log_scale});
  }
  return out;
}

}  // namespace biclique
