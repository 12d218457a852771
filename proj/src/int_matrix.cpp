#include "twistcert/int_matrix.hpp"

#include <bit>
#include <sstream>
#include <utility>

#include "twistcert/errors.hpp"

namespace twistcert {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::elementary(std::size_t dim, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > dim || j > dim) {
    throw RangeError("matrix unit E_{" + std::to_string(i) + "," + std::to_string(j) +
                     "} outside dimension " + std::to_string(dim));
  }
  IntMatrix m(dim);
  m(i - 1, j - 1) = 1;
  return m;
}

namespace {

template <typename T>
IntMatrix from_rows_impl(const std::vector<std::vector<T>>& rows) {
  const std::size_t n = rows.size();
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw DimensionError("matrix rows must form a square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Integer(rows[r][c]);
  }
  return m;
}

void require_same_dim(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  return from_rows_impl(rows);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  return from_rows_impl(rows);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
  std::vector<std::vector<Integer>> out(dim_, std::vector<Integer>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  IntMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Integer& bkc = b(k, c);
        if (bkc != 0) mpz_addmul(out(r, c).get_mpz_t(), ark.get_mpz_t(), bkc.get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

IntMatrix product(std::span<const IntMatrix> factors, std::size_t dim) {
  IntMatrix acc = IntMatrix::identity(dim);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

IntMatrix mat_pow(const IntMatrix& m, std::uint64_t exponent) {
  IntMatrix result = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Integer> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntMatrix symplectic_form(std::size_t genus) {
  IntMatrix j(2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

bool sp_check(const IntMatrix& m, std::size_t genus) {
  if (genus == 0 || m.dim() != 2 * genus) return false;
  const IntMatrix j = symplectic_form(genus);
  return m.transpose() * j * m == j;
}

SpMatrix::SpMatrix(IntMatrix m, std::size_t genus) : m_(std::move(m)), genus_(genus) {
  if (genus_ < 2 || m_.dim() != 2 * genus_) {
    throw DimensionError("symplectic matrix must be 2g x 2g with g >= 2");
  }
  if (!sp_check(m_, genus_)) throw NotSymplecticError("matrix fails M^T J M = J");
}

SpMatrix SpMatrix::identity(std::size_t genus) { return SpMatrix(IntMatrix::identity(2 * genus), genus); }

SpMatrix sp_multiply(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus_ != b.genus_) throw DimensionError("genus mismatch in symplectic product");
  return SpMatrix(a.m_ * b.m_, a.genus_, SpMatrix::Unchecked{});
}

SpMatrix sp_inverse(const SpMatrix& m) {
  const IntMatrix j = symplectic_form(m.genus_);
  return SpMatrix(-(j * m.m_.transpose() * j), m.genus_, SpMatrix::Unchecked{});
}

SpMatrix sp_pow(const SpMatrix& m, std::int64_t exponent) {
  const SpMatrix base = exponent < 0 ? sp_inverse(m) : m;
  const std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                       : static_cast<std::uint64_t>(exponent);
  return SpMatrix(mat_pow(base.matrix(), e), m.genus());
}

namespace {

void require_modulus(std::uint64_t q) {
  if (q < 2 || !std::has_single_bit(q) || q > (std::uint64_t{1} << 62)) {
    throw ModulusError("modulus must be a power of two in [2, 2^62], got " + std::to_string(q));
  }
}

}  // namespace

ModMatrix::ModMatrix(std::size_t dim, std::uint64_t modulus)
    : dim_(dim), modulus_(modulus), entries_(dim * dim, 0) {
  require_modulus(modulus);
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

ModMatrix ModMatrix::identity(std::size_t dim, std::uint64_t modulus) {
  ModMatrix m(dim, modulus);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

bool ModMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1U : 0U)) return false;
  return true;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(dim_, modulus_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  require_modulus(modulus);
  ModMatrix out(m.dim(), modulus);
  const Integer q(static_cast<unsigned long>(modulus));
  Integer residue;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      mpz_fdiv_r(residue.get_mpz_t(), m(r, c).get_mpz_t(), q.get_mpz_t());
      out.set(r, c, residue.get_ui());
    }
  }
  return out;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
    throw DimensionError("modular product needs equal dimension and modulus");
  }
  const std::size_t n = a.dim();
  ModMatrix out(n, a.modulus());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Wrapping unsigned arithmetic is exact modulo 2^64, hence modulo q.
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
      out.set(r, c, acc);
    }
  }
  return out;
}

bool sp_check_mod(const ModMatrix& m, std::size_t genus) {
  if (m.dim() != 2 * genus) return false;
  const ModMatrix j = reduce_mod(symplectic_form(genus), m.modulus());
  return mod_mul(mod_mul(m.transpose(), j), m) == j;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace twistcert
