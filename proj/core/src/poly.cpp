#include "biclique/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "biclique/errors.hpp"

namespace biclique {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& value) { return IntPoly(std::vector<Integer>{value}); }

IntPoly IntPoly::monomial(std::size_t power, const Integer& coefficient) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = coefficient;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::linear_factor(const Integer& root) {
  return IntPoly(std::vector<Integer>{-root, Integer(1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
  if (is_zero()) throw InvalidInput("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const Integer& IntPoly::leading() const {
  if (is_zero()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) out[i + k] += coeffs_[i] * rhs.coeffs_[k];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly falling_factorial(std::size_t m, const Integer& shift) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t r = 0; r < m; ++r) out *= IntPoly::linear_factor(shift + Integer(static_cast<unsigned long>(r)));
  return out;
}

IntPoly shift_poly(const IntPoly& p, const Integer& c) {
  // Taylor shift by repeated synthetic division (Horner scheme).
  std::vector<Integer> a = p.coefficients();
  const std::size_t n = a.size();
  if (n == 0 || c == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) a[k] += c * a[k + 1];
  }
  return IntPoly(std::move(a));
}

IntPoly reflect_poly(const IntPoly& p, const Integer& c) {
  const std::size_t deg = p.degree();
  // p(-x): negate odd coefficients; then shift by -c gives p(-(x - c)) = p(-x + c).
  std::vector<Integer> a = p.coefficients();
  for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  IntPoly out = shift_poly(IntPoly(std::move(a)), -c);
  if (deg % 2 == 1) out = -out;
  return out;
}

Integer eval_int(const IntPoly& p, const Integer& q) {
  Integer acc = 0;
  const auto& a = p.coefficients();
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * q + a[i];
  return acc;
}

FFSeries to_complete_graph_basis(const IntPoly& p) {
  // Newton form at nodes 0,1,2,...: divide successively by (x - n).
  FFSeries out;
  std::vector<Integer> a = p.coefficients();
  for (std::size_t n = 0; !a.empty(); ++n) {
    // Synthetic division of a by (x - n); remainder is the coefficient of (x)_n.
    const Integer node = static_cast<unsigned long>(n);
    Integer carry = 0;
    std::vector<Integer> quotient(a.size() > 1 ? a.size() - 1 : 0);
    for (std::size_t i = a.size(); i-- > 0;) {
      Integer value = a[i] + carry * node;
      if (i == 0) {
        if (value != 0) out.entries.emplace(n, value);
      } else {
        quotient[i - 1] = value;
      }
      carry = value;
    }
    a = std::move(quotient);
  }
  return out;
}

IntPoly from_complete_graph_basis(const FFSeries& series) {
  IntPoly out;
  for (const auto& [n, c] : series.entries) out += falling_factorial(n) * c;
  return out;
}

DivisionResult divide_by_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw InvalidInput("divisor must be monic");
  const std::size_t dd = divisor.degree();
  std::vector<Integer> rem = dividend.coefficients();
  if (rem.size() <= dd) return {IntPoly(), dividend};
  std::vector<Integer> quot(rem.size() - dd, Integer(0));
  const auto& d = divisor.coefficients();
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer factor = rem[i];
    quot[i - dd] = factor;
    if (factor == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= factor * d[k];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

Integer binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer falling_value(const Integer& value, long count) {
  Integer out = 1;
  for (long r = 0; r < count; ++r) out *= value - r;
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace biclique
