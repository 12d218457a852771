#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistcert/int_matrix.hpp"

namespace twistcert {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly monomial(std::size_t degree, const Integer& coefficient = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Integer coefficient(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Integer evaluate(const Integer& x) const;
  IntPoly derivative() const;
  /// x^d p(1/x) for d = degree.
  IntPoly reversed() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& p);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Canonical order: by degree, then lexicographically by coefficients from
/// the constant term upward.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// Division by a monic divisor; quotient and remainder stay integral.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& dividend, const IntPoly& divisor);
/// True iff the monic divisor divides p exactly in Z[x].
bool divides_monic(const IntPoly& divisor, const IntPoly& p);

IntPoly pow(const IntPoly& p, unsigned exponent);

/// det(xI - M) by Faddeev-LeVerrier with exact integer division.
IntPoly charpoly(const IntMatrix& m);

/// Coefficient palindrome: x^d p(1/x) == p(x).
bool is_reciprocal(const IntPoly& p);
/// All odd-degree coefficients vanish.
bool is_polynomial_in_x_squared(const IntPoly& p);
/// p(x) = r(x^k) for some k >= 2; constants count as such.
bool is_polynomial_in_x_power(const IntPoly& p);

/// Human form such as "x^4 + x^3 - 2x^2 + x + 1".
std::string to_string(const IntPoly& p);

}  // namespace twistcert
