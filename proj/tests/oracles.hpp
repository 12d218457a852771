#pragma once

// Independent reference computations used only by the test suites.

#include <cstddef>
#include <vector>

#include "twistcert/int_matrix.hpp"
#include "twistcert/int_poly.hpp"

namespace twistcert::oracle {

inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// det(xI - M) by Laplace expansion along the first row of a matrix of
// polynomial entries.
inline IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  IntPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<IntPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    IntPoly term = m[0][c] * poly_det(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline IntPoly charpoly_by_minors(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntPoly entry(std::vector<Integer>{-a(i, j)});
      if (i == j) entry += IntPoly{0, 1};
      m[i][j] = entry;
    }
  return poly_det(m);
}

// Determinant by permutation-free cofactor expansion over integers.
inline Integer det_by_minors(const IntMatrix& a) {
  return charpoly_by_minors(a).coefficient(0) * Integer((a.dim() % 2 == 0) ? 1 : -1);
}

}  // namespace twistcert::oracle
