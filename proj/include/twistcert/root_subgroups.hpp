#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistcert/int_matrix.hpp"

namespace twistcert {

enum class RootKind : std::uint8_t { V, W, X, Y, Z };

/// V_i^t, W_i^t (i = j, k unused), X_{j,k}^t (j != k), Y_{j,k}^t and
/// Z_{j,k}^t (j < k). Indices are 1-based.
struct RootSpec {
  RootKind kind;
  std::size_t j;
  std::size_t k;
  std::int64_t t;

  friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

bool valid_root_spec(const RootSpec& s, std::size_t genus);
std::string to_string(const RootSpec& s);

/// Every valid spec of the genus with the given parameter.
std::vector<RootSpec> all_root_specs(std::size_t genus, std::int64_t t);

/// Throws RangeError on an invalid spec.
SpMatrix root_matrix(const RootSpec& s, std::size_t genus);

/// A_i^2 B_{i+1}^2 R_{i+1} C_i^2 R_{i+1}^{-1} with R = A B A, 1 <= i <= g-1.
SpMatrix d_matrix(std::size_t i, std::size_t genus);
/// R_{i-1} C_{i-1}^{-2} R_{i-1}^{-1} B_{i-1}^{-2} A_i^{-2}, 2 <= i <= g.
SpMatrix d_prime_matrix(std::size_t i, std::size_t genus);

/// Letter of the generating set of Gamma: A_i^{+-1}, B_i^{+-1}, C_i^{+-2}.
struct GenLetter {
  char gen;  // 'A', 'B' or 'C'
  std::size_t index;
  int exponent;

  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

/// Word in the generators, evaluated as the literal left-to-right matrix
/// product.
class GenWord {
 public:
  /// Throws DimensionError for genus < 2, RangeError for a bad letter.
  explicit GenWord(std::size_t genus, std::vector<GenLetter> letters = {});

  std::size_t genus() const noexcept { return genus_; }
  const std::vector<GenLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  /// Number of maximal runs of one repeated letter.
  std::size_t syllables() const;

  void append(const GenLetter& l);
  void append(const GenWord& w);

  GenWord inverse() const;
  GenWord power(std::int64_t n) const;

  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::size_t genus_;
  std::vector<GenLetter> letters_;
};

/// u v u^-1 v^-1.
GenWord commutator(const GenWord& u, const GenWord& v);

/// Tokens `A1`, `A1^-1`, `B3`, `C2^2`, `C2^-2`, whitespace-separated. Throws
/// ParseError with a byte offset.
GenWord parse_gen_word(std::string_view text, std::size_t genus);
std::string format_gen_word(const GenWord& w);

SpMatrix gen_letter_matrix(const GenLetter& l, std::size_t genus);
SpMatrix eval_gen_word(const GenWord& w);

/// Word whose product is D_i (resp. D'_i).
GenWord d_word(std::size_t i, std::size_t genus);
GenWord d_prime_word(std::size_t i, std::size_t genus);

/// Smallest positive t for which the synthesizer has a word: 1 for V and W,
/// 2^{|k-j|} otherwise.
std::int64_t base_exponent(const RootSpec& s);

/// A word in the generators with eval_gen_word(w) == root_matrix(s). Throws
/// RangeError on an invalid spec and std::invalid_argument when t is not a
/// nonzero multiple of base_exponent(s); t = 2^{g-1} is always supported.
GenWord synthesize_root(const RootSpec& s, std::size_t genus);

/// True iff m mod 2 is block diagonal with 2x2 blocks in the interleaved
/// basis (a_1, b_1, a_2, b_2, ...). Necessary for membership in Gamma.
bool mod2_block_test(const SpMatrix& m);

}  // namespace twistcert
