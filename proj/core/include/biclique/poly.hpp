#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace biclique {

using Integer = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored constant term first. The representation is kept
/// canonical: no trailing zero coefficients, and the zero polynomial is the
/// empty sequence. Every operation is exact.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const Integer& value);
  static IntPoly monomial(std::size_t power, const Integer& coefficient = 1);
  /// x - root
  static IntPoly linear_factor(const Integer& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws InvalidInput on the zero polynomial.
  std::size_t degree() const;
  /// Leading coefficient; throws InvalidInput on the zero polynomial.
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^power; zero beyond the degree.
  Integer coeff(std::size_t power) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(IntPoly lhs, const IntPoly& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(IntPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(const Integer& lhs, IntPoly rhs) { return rhs *= lhs; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Human-readable form, e.g. "x^3 - 6*x^2 + 14*x - 13".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Sum of c_n * (x)_n, keyed by n. Zero entries are never stored.
struct FFSeries {
  std::map<std::size_t, Integer> entries;

  friend bool operator==(const FFSeries&, const FFSeries&) = default;
};

/// (x - shift)(x - shift - 1)...(x - shift - m + 1); m = 0 gives 1.
IntPoly falling_factorial(std::size_t m, const Integer& shift = 0);

/// p(x + c).
IntPoly shift_poly(const IntPoly& p, const Integer& c);

/// (-1)^deg(p) * p(-x + c). Rejects the zero polynomial.
IntPoly reflect_poly(const IntPoly& p, const Integer& c);

/// Exact value p(q) by Horner's rule.
Integer eval_int(const IntPoly& p, const Integer& q);

/// Unique c_n with p = sum c_n (x)_n.
FFSeries to_complete_graph_basis(const IntPoly& p);
IntPoly from_complete_graph_basis(const FFSeries& series);

/// Quotient and remainder of division by a monic divisor.
struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
};
DivisionResult divide_by_monic(const IntPoly& dividend, const IntPoly& divisor);

// Integer helpers shared by the matching and reflection formulas.

/// C(n, r), zero when r < 0 or r > n (n >= 0).
Integer binomial(long n, long r);

/// value (value - 1) ... (value - count + 1); count = 0 gives 1.
Integer falling_value(const Integer& value, long count);

Integer factorial(long n);

}  // namespace biclique
