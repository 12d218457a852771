#pragma once

#include <cstddef>
#include <vector>

#include "twistcert/int_poly.hpp"

namespace twistcert {

/// Largest degree accepted by the factorization routines.
inline constexpr long kMaxFactorDegree = 64;

/// Complete factorization of a monic integer polynomial into monic
/// irreducibles, repeated by multiplicity and sorted by canonical_less.
///
/// Squarefree decomposition over Q, then for each squarefree part:
/// factorization modulo a small prime that keeps it squarefree (the best of a
/// few candidate primes), multifactor Hensel lifting past twice the Mignotte
/// bound, and recombination of lifted factors by subsets of increasing size.
///
/// Throws DegreeBoundError beyond kMaxFactorDegree, std::invalid_argument on a
/// zero or non-monic input.
std::vector<IntPoly> factor_over_Z(const IntPoly& p);

/// Same contract as factor_over_Z, by direct search: monic factors of each
/// degree up to deg/2 are enumerated from divisor patterns of the values at
/// integer points (Kronecker), pruned by integrality of Newton divided
/// differences and filtered by the Mignotte coefficient bound. Exponential in
/// the degree; throws DegreeBoundError above degree 12.
std::vector<IntPoly> factor_by_search(const IntPoly& p);

/// Irreducible over Z (monic input, degree >= 1).
bool is_irreducible(const IntPoly& p);

/// The n-th cyclotomic polynomial, from x^n - 1 divided by Phi_d for d | n, d < n.
IntPoly cyclotomic(unsigned long n);

struct CyclotomicDecomposition {
  bool is_product = false;
  /// Indices n of the matched Phi_n, with multiplicity, ascending.
  std::vector<unsigned long> indices;
};

/// Trial division by Phi_n for all n with phi(n) <= deg p, searching
/// n <= 2 deg^2 (phi(n) >= sqrt(n/2)).
CyclotomicDecomposition cyclotomic_decomposition(const IntPoly& p);
bool is_cyclotomic_product(const IntPoly& p);

/// Reverse of a monic factor, sign-normalized to be monic again.
IntPoly monic_reverse(const IntPoly& f);

/// True iff p has no factorization p = f h into monic reciprocal integer
/// polynomials of positive degree. Reversals are normalized to monic before
/// pairing, so x - 1 counts as self-reciprocal. Throws NotReciprocalError if p
/// is not a coefficient palindrome.
bool is_symplectically_irreducible(const IntPoly& p);

}  // namespace twistcert
