#include "twistcert/twist_word.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "twistcert/errors.hpp"

namespace twistcert {

char kind_char(CurveKind k) {
  switch (k) {
    case CurveKind::a: return 'a';
    case CurveKind::b: return 'b';
    case CurveKind::c: return 'c';
    case CurveKind::d: return 'd';
  }
  return '?';
}

bool valid_for_genus(const CurveLetter& c, std::size_t genus) {
  const std::size_t top = (c.kind == CurveKind::a || c.kind == CurveKind::b) ? genus : genus - 1;
  return c.index >= 1 && c.index <= top;
}

std::string to_string(const CurveLetter& c) { return kind_char(c.kind) + std::to_string(c.index); }

bool curves_disjoint(const CurveLetter& x, const CurveLetter& y) {
  auto meets = [](const CurveLetter& u, const CurveLetter& v) {
    using K = CurveKind;
    if (u.kind == K::a && v.kind == K::b) return u.index == v.index;
    if (u.kind == K::b && v.kind == K::c) return u.index == v.index || u.index == v.index + 1;
    if (u.kind == K::c && v.kind == K::d) return u.index == v.index;
    return false;
  };
  if (x == y) return true;  // a curve is isotopic off itself
  return !meets(x, y) && !meets(y, x);
}

TwistWord::TwistWord(std::size_t genus, std::vector<Syllable> letters) : genus_(genus) {
  if (genus < 2) throw DimensionError("twist word: genus must be at least 2");
  letters_.reserve(letters.size());
  for (const auto& s : letters) append(s);
}

void TwistWord::append(const Syllable& s) {
  if (!valid_for_genus(s.curve, genus_))
    throw RangeError("letter " + to_string(s.curve) + " out of range for genus " + std::to_string(genus_));
  if (s.exponent != 0) letters_.push_back(s);
}

void TwistWord::append(const TwistWord& w) {
  if (w.genus_ != genus_) throw DimensionError("twist word: genus mismatch");
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

TwistWord parse_word(std::string_view text, std::size_t genus) {
  TwistWord w(genus);
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  while (true) {
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos >= n) break;
    const std::size_t start = pos;
    CurveKind kind;
    switch (text[pos]) {
      case 'a': kind = CurveKind::a; break;
      case 'b': kind = CurveKind::b; break;
      case 'c': kind = CurveKind::c; break;
      case 'd': kind = CurveKind::d; break;
      default: throw ParseError(pos, "expected a curve letter a, b, c or d");
    }
    ++pos;
    const std::size_t digits = pos;
    while (pos < n && is_digit(text[pos])) ++pos;
    if (pos == digits) throw ParseError(pos, "expected a curve index");
    std::size_t index = 0;
    if (std::from_chars(text.data() + digits, text.data() + pos, index).ec != std::errc{})
      throw ParseError(digits, "curve index too large");
    std::int64_t exponent = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      const std::size_t num = pos;
      if (pos < n && (text[pos] == '-' || text[pos] == '+')) ++pos;
      const std::size_t first_digit = pos;
      while (pos < n && is_digit(text[pos])) ++pos;
      if (pos == first_digit) throw ParseError(pos, "expected an exponent");
      const char* b = text.data() + num + (text[num] == '+' ? 1 : 0);
      if (std::from_chars(b, text.data() + pos, exponent).ec != std::errc{})
        throw ParseError(num, "exponent out of range");
    }
    if (pos < n && !is_space(text[pos])) throw ParseError(pos, "unexpected character");
    const CurveLetter letter{kind, index};
    if (!valid_for_genus(letter, genus))
      throw ParseError(start, "letter " + to_string(letter) + " out of range for genus " + std::to_string(genus));
    w.append(Syllable{letter, exponent});
  }
  return w;
}

std::string format_word(const TwistWord& w) {
  std::string out;
  for (const auto& s : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(s.curve);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

namespace {

// R <- (I + e N) R for the nilpotent part N of the letter.
void apply_on_left(IntMatrix& r, const CurveLetter& l, const Integer& e, std::size_t g) {
  const std::size_t n = 2 * g;
  const std::size_t i = l.index - 1;
  switch (l.kind) {
    case CurveKind::a:
      for (std::size_t col = 0; col < n; ++col) r(i, col) += e * r(g + i, col);
      break;
    case CurveKind::b:
      for (std::size_t col = 0; col < n; ++col) r(g + i, col) -= e * r(i, col);
      break;
    case CurveKind::c:
      for (std::size_t col = 0; col < n; ++col) {
        const Integer diff = r(g + i + 1, col) - r(g + i, col);
        r(i, col) += e * diff;
        r(i + 1, col) -= e * diff;
      }
      break;
    case CurveKind::d:
      break;
  }
}

}  // namespace

IntMatrix letter_power(const CurveLetter& letter, std::int64_t exponent, std::size_t genus) {
  if (!valid_for_genus(letter, genus)) throw RangeError("letter " + to_string(letter) + " out of range");
  IntMatrix m = IntMatrix::identity(2 * genus);
  const Integer e(static_cast<long>(exponent));
  apply_on_left(m, letter, e, genus);
  return m;
}

SpMatrix generator_matrix(const CurveLetter& letter, std::size_t genus) {
  return SpMatrix(letter_power(letter, 1, genus), genus);
}

SpMatrix eval_word(const TwistWord& w) {
  const std::size_t g = w.genus();
  IntMatrix r = IntMatrix::identity(2 * g);
  for (const auto& s : w.letters()) apply_on_left(r, s.curve, Integer(static_cast<long>(s.exponent)), g);
  return SpMatrix(std::move(r), g);
}

namespace {

struct RunEntry {
  std::int64_t sum = 0;
  std::size_t first = 0;
};

// Maximal run of one kind starting at pos; exponents merged per index since
// same-kind twists commute.
std::map<std::size_t, RunEntry> merge_run(const std::vector<Syllable>& ls, std::size_t& pos, CurveKind kind) {
  std::map<std::size_t, RunEntry> run;
  while (pos < ls.size() && ls[pos].curve.kind == kind) {
    auto [it, inserted] = run.try_emplace(ls[pos].curve.index);
    if (inserted) it->second.first = pos;
    it->second.sum += ls[pos].exponent;
    ++pos;
  }
  return run;
}

}  // namespace

TValidation validate_family_T(const TwistWord& w) {
  const auto& ls = w.letters();
  const std::size_t g = w.genus();
  TDecomposition dec;
  std::size_t pos = 0;
  while (pos < ls.size()) {
    const std::size_t start = pos;
    if (ls[pos].curve.kind != CurveKind::d)
      return TRejection{pos, "expected the d-part (every d_l at exponent -2) at the start of a block"};
    const auto d = merge_run(ls, pos, CurveKind::d);
    // A run of m copies of the d-part has every index summing to -2m.
    std::int64_t copies = 0;
    std::size_t bad = ls.size();
    for (std::size_t l = 1; l + 1 <= g; ++l) {
      const auto it = d.find(l);
      if (it == d.end()) {
        bad = std::min(bad, start);
        continue;
      }
      const std::int64_t s = it->second.sum;
      if (copies == 0 && s < 0 && s % 2 == 0) copies = -s / 2;
      if (s >= 0 || s % 2 != 0 || -s / 2 != copies) bad = std::min(bad, it->second.first);
    }
    if (bad < ls.size()) return TRejection{bad, "d-part must contain every d_l at exponent -2"};
    TBlock block{std::vector<std::int64_t>(g), std::vector<std::int64_t>(g), std::vector<std::int64_t>(g - 1)};
    for (std::int64_t k = 1; k < copies; ++k) dec.blocks.push_back(block);

    for (const auto& [j, e] : merge_run(ls, pos, CurveKind::b)) block.q[j - 1] = e.sum;
    bad = ls.size();
    for (const auto& [m, e] : merge_run(ls, pos, CurveKind::c)) {
      if (e.sum != 0 && e.sum != -2) bad = std::min(bad, e.first);
      block.r[m - 1] = e.sum;
    }
    if (bad < ls.size()) return TRejection{bad, "c-exponent must be 0 or -2"};
    for (const auto& [i, e] : merge_run(ls, pos, CurveKind::a)) block.p[i - 1] = e.sum;
    dec.blocks.push_back(std::move(block));
  }
  return dec;
}

TwistWord tau_hat_d(std::size_t genus) {
  TwistWord w(genus);
  for (std::size_t l = 1; l < genus; ++l) w.append(Syllable{{CurveKind::d, l}, -2});
  return w;
}

TwistWord block_word(const TBlock& b, std::size_t genus) {
  if (b.p.size() != genus || b.q.size() != genus || b.r.size() + 1 != genus)
    throw DimensionError("block exponents do not match the genus");
  TwistWord w = tau_hat_d(genus);
  for (std::size_t j = 0; j < genus; ++j) w.append(Syllable{{CurveKind::b, j + 1}, b.q[j]});
  for (std::size_t m = 0; m + 1 < genus; ++m) {
    if (b.r[m] != 0 && b.r[m] != -2) throw std::invalid_argument("block c-exponent must be 0 or -2");
    w.append(Syllable{{CurveKind::c, m + 1}, b.r[m]});
  }
  for (std::size_t i = 0; i < genus; ++i) w.append(Syllable{{CurveKind::a, i + 1}, b.p[i]});
  return w;
}

TwistWord reassemble(const TDecomposition& d, std::size_t genus) {
  TwistWord w(genus);
  for (const auto& b : d.blocks) w.append(block_word(b, genus));
  return w;
}

}  // namespace twistcert
