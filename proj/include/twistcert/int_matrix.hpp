#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twistcert {

using Integer = mpz_class;

/// Square matrix of arbitrary-precision integers, row-major.
///
/// Entry access is 0-based. The helpers `elementary` and `entry1` use the
/// 1-based (row, column) convention of the matrix units E_{i,j}.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);

  static IntMatrix identity(std::size_t dim);
  /// E_{i,j}: a single 1 at 1-based position (i, j).
  static IntMatrix elementary(std::size_t dim, std::size_t i, std::size_t j);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Integer> entries() const noexcept { return entries_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const Integer& entry1(std::size_t i, std::size_t j) const { return (*this)(i - 1, j - 1); }

  IntMatrix transpose() const;
  bool is_identity() const;

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  IntMatrix& operator*=(const Integer& s);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator-(IntMatrix a) { return a *= Integer(-1); }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<std::vector<Integer>> rows() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

/// Exact product; throws DimensionError on mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Left-to-right product of a list of matrices. Empty list gives identity(dim).
IntMatrix product(std::span<const IntMatrix> factors, std::size_t dim);

/// Non-negative power by repeated squaring. Signed powers live on SpMatrix.
IntMatrix mat_pow(const IntMatrix& m, std::uint64_t exponent);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// The standard symplectic form [[0, I_g], [-I_g, 0]].
IntMatrix symplectic_form(std::size_t genus);

/// True iff m^T J m = J exactly for the genus-g form J; false on a size mismatch.
bool sp_check(const IntMatrix& m, std::size_t genus);

/// A 2g x 2g integer matrix certified symplectic at construction.
class SpMatrix {
 public:
  /// Throws NotSymplecticError unless m^T J m = J, DimensionError unless
  /// m is 2g x 2g with g >= 2.
  SpMatrix(IntMatrix m, std::size_t genus);

  static SpMatrix identity(std::size_t genus);

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t genus() const noexcept { return genus_; }

  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

 private:
  struct Unchecked {};
  SpMatrix(IntMatrix m, std::size_t genus, Unchecked) : m_(std::move(m)), genus_(genus) {}

  friend SpMatrix sp_multiply(const SpMatrix&, const SpMatrix&);
  friend SpMatrix sp_inverse(const SpMatrix&);

  IntMatrix m_;
  std::size_t genus_;
};

/// Product of two symplectic matrices (closure of Sp means no re-check).
SpMatrix sp_multiply(const SpMatrix& a, const SpMatrix& b);
/// M^{-1} = -J M^T J.
SpMatrix sp_inverse(const SpMatrix& m);
/// Signed power, via sp_inverse for negative exponents.
SpMatrix sp_pow(const SpMatrix& m, std::int64_t exponent);

/// Square matrix over Z/q with q a power of two, entries reduced into [0, q).
class ModMatrix {
 public:
  /// Throws ModulusError unless modulus is a power of two in [2, 2^62].
  ModMatrix(std::size_t dim, std::uint64_t modulus);

  static ModMatrix identity(std::size_t dim, std::uint64_t modulus);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> entries() const noexcept { return entries_; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { entries_[r * dim_ + c] = v & (modulus_ - 1); }

  bool is_identity() const;
  ModMatrix transpose() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t dim_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> entries_;
};

/// Entrywise residues in [0, q); throws ModulusError for an invalid modulus.
ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus);
/// Product over Z/q; operands must share dimension and modulus.
ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
/// m^T J m == J over Z/q.
bool sp_check_mod(const ModMatrix& m, std::size_t genus);

std::string to_string(const IntMatrix& m);

}  // namespace twistcert
