#include "twistcert/int_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twistcert/errors.hpp"

namespace twistcert {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, const Integer& coefficient) {
  std::vector<Integer> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> c(a.coeffs_);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& s, const IntPoly& p) {
  std::vector<Integer> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {IntPoly{}, dividend};
  std::vector<Integer> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<Integer> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const auto dc = divisor.coefficients();
  for (long k = dividend.degree() - dd; k >= 0; --k) {
    const Integer q = rem[static_cast<std::size_t>(k + dd)];
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j)
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 dc[static_cast<std::size_t>(j)].get_mpz_t());
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool divides_monic(const IntPoly& divisor, const IntPoly& p) { return divmod_monic(p, divisor).second.is_zero(); }

IntPoly pow(const IntPoly& p, unsigned exponent) {
  IntPoly result{1};
  for (unsigned k = 0; k < exponent; ++k) result = result * p;
  return result;
}

IntPoly charpoly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const IntMatrix amk = m * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

bool is_reciprocal(const IntPoly& p) { return p.reversed() == p; }

bool is_polynomial_in_x_squared(const IntPoly& p) {
  const auto c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2)
    if (c[k] != 0) return false;
  return true;
}

bool is_polynomial_in_x_power(const IntPoly& p) {
  const auto c = p.coefficients();
  std::size_t g = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) g = std::gcd(g, k);
  return g != 1;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = p.coefficients();
  for (long k = p.degree(); k >= 0; --k) {
    const Integer& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace twistcert
