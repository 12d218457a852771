#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twistcert/int_matrix.hpp"

namespace twistcert {

enum class CurveKind : std::uint8_t { a, b, c, d };

char kind_char(CurveKind k);

/// One curve of the chain system: a_i, b_i (1 <= i <= g) or c_i, d_i
/// (1 <= i <= g-1).
struct CurveLetter {
  CurveKind kind;
  std::size_t index;

  friend bool operator==(const CurveLetter&, const CurveLetter&) = default;
  friend auto operator<=>(const CurveLetter&, const CurveLetter&) = default;
};

bool valid_for_genus(const CurveLetter& c, std::size_t genus);
std::string to_string(const CurveLetter& c);

/// False only for the intersecting pairs (a_m, b_m), (b_n, c_n), (b_{n+1}, c_n)
/// and (c_n, d_n). Disjoint twists commute.
bool curves_disjoint(const CurveLetter& x, const CurveLetter& y);

struct Syllable {
  CurveLetter curve;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in Dehn twists, written left to right. Zero exponents are dropped.
class TwistWord {
 public:
  /// Throws DimensionError for genus < 2, RangeError for a letter outside the
  /// genus.
  explicit TwistWord(std::size_t genus, std::vector<Syllable> letters = {});

  std::size_t genus() const noexcept { return genus_; }
  const std::vector<Syllable>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void append(const Syllable& s);
  void append(const TwistWord& w);

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  std::size_t genus_;
  std::vector<Syllable> letters_;
};

/// Tokens `a1`, `b2^-1`, `c1^-2`, separated by whitespace. Throws ParseError
/// with the byte offset of the bad token (syntax or range).
TwistWord parse_word(std::string_view text, std::size_t genus);
std::string format_word(const TwistWord& w);

/// Action on H_1 in the basis (a_1..a_g, b_1..b_g).
SpMatrix generator_matrix(const CurveLetter& letter, std::size_t genus);
/// generator_matrix(letter)^exponent; every generator is I + N with N^2 = 0.
IntMatrix letter_power(const CurveLetter& letter, std::int64_t exponent, std::size_t genus);

/// eval(s_1 s_2 ... s_k) = M(s_k) ... M(s_1).
SpMatrix eval_word(const TwistWord& w);

/// One element of the family: d-part (every d_l at -2), then b_j^{q_j},
/// c_m^{r_m} with r_m in {0, -2}, then a_i^{p_i}.
struct TBlock {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> r;

  friend bool operator==(const TBlock&, const TBlock&) = default;
};

struct TDecomposition {
  std::vector<TBlock> blocks;

  /// An empty decomposition means the empty word.
  bool trivial() const noexcept { return blocks.empty(); }
  friend bool operator==(const TDecomposition&, const TDecomposition&) = default;
};

struct TRejection {
  std::size_t position;  // index into TwistWord::letters()
  std::string reason;
};

using TValidation = std::variant<TDecomposition, TRejection>;

TValidation validate_family_T(const TwistWord& w);

/// Canonical word of a block: d_1^-2 .. d_{g-1}^-2, b's, c's, a's, indices
/// ascending, zero exponents omitted.
TwistWord block_word(const TBlock& b, std::size_t genus);
TwistWord reassemble(const TDecomposition& d, std::size_t genus);

/// d_1^-2 ... d_{g-1}^-2.
TwistWord tau_hat_d(std::size_t genus);

}  // namespace twistcert
