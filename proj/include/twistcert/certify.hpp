#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "twistcert/int_poly.hpp"
#include "twistcert/twist_word.hpp"

namespace twistcert {

enum class PAReason : std::uint8_t {
  reducible_charpoly,
  cyclotomic,
  polynomial_in_x2,
  not_symplectically_irreducible,
  polynomial_in_xk,  // strict mode only
};

/// Stable tag, e.g. "polynomial_in_x2".
const char* reason_tag(PAReason r);

struct PAVerdict {
  enum class Status : std::uint8_t { certified_pa, inconclusive };
  Status status = Status::inconclusive;
  std::vector<PAReason> reasons;  // ascending, empty iff certified

  bool certified() const noexcept { return status == Status::certified_pa; }
};

struct CertifyOptions {
  /// Also reject polynomials in x^k for any k >= 2.
  bool strict_power = false;
};

/// One-sided homological certificate: certified_pa means the characteristic
/// polynomial is irreducible, symplectically irreducible, has no root of
/// unity as a root and is not a polynomial in x^2. Inconclusive lists every
/// failing condition and never asserts the mapping class is not
/// pseudo-Anosov.
PAVerdict certify_pa(const SpMatrix& m, const CertifyOptions& opts = {});
PAVerdict certify_charpoly(const IntPoly& chi, const CertifyOptions& opts = {});

enum class Tristate : std::uint8_t { yes, no, unknown };
const char* to_string(Tristate t);

struct CertReport {
  TwistWord word;
  SpMatrix matrix;
  IntPoly charpoly;
  /// yes iff the word is a non-trivial product of family blocks.
  Tristate anosov;
  TValidation family;
  PAVerdict pa;
  /// yes only as a corollary of a pseudo-Anosov certificate.
  Tristate hyperbolic;
};

CertReport certify_report(const TwistWord& w, const CertifyOptions& opts = {});

}  // namespace twistcert
