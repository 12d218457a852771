#include "twistcert/root_subgroups.hpp"

#include <charconv>

#include "twistcert/errors.hpp"
#include "twistcert/twist_word.hpp"

namespace twistcert {

namespace {

IntMatrix E(std::size_t n, std::size_t i, std::size_t j) { return IntMatrix::elementary(n, i, j); }

IntMatrix gen_power(char gen, std::size_t index, std::int64_t e, std::size_t g) {
  const CurveKind k = gen == 'A' ? CurveKind::a : gen == 'B' ? CurveKind::b : CurveKind::c;
  return letter_power({k, index}, e, g);
}

IntMatrix rot(std::size_t i, std::size_t g) {
  return gen_power('A', i, 1, g) * gen_power('B', i, 1, g) * gen_power('A', i, 1, g);
}

bool letter_ok(const GenLetter& l, std::size_t g) {
  switch (l.gen) {
    case 'A':
    case 'B': return l.index >= 1 && l.index <= g && (l.exponent == 1 || l.exponent == -1);
    case 'C': return l.index >= 1 && l.index < g && (l.exponent == 2 || l.exponent == -2);
    default: return false;
  }
}

}  // namespace

bool valid_root_spec(const RootSpec& s, std::size_t g) {
  auto in = [g](std::size_t x) { return x >= 1 && x <= g; };
  switch (s.kind) {
    case RootKind::V:
    case RootKind::W: return in(s.j);
    case RootKind::X: return in(s.j) && in(s.k) && s.j != s.k;
    case RootKind::Y:
    case RootKind::Z: return in(s.j) && in(s.k) && s.j < s.k;
  }
  return false;
}

std::string to_string(const RootSpec& s) {
  static const char names[] = {'V', 'W', 'X', 'Y', 'Z'};
  std::string out(1, names[static_cast<int>(s.kind)]);
  out += std::to_string(s.j);
  if (s.kind != RootKind::V && s.kind != RootKind::W) out += "," + std::to_string(s.k);
  out += "^" + std::to_string(s.t);
  return out;
}

std::vector<RootSpec> all_root_specs(std::size_t g, std::int64_t t) {
  std::vector<RootSpec> out;
  for (std::size_t i = 1; i <= g; ++i) out.push_back({RootKind::V, i, 0, t});
  for (std::size_t i = 1; i <= g; ++i) out.push_back({RootKind::W, i, 0, t});
  for (std::size_t j = 1; j <= g; ++j)
    for (std::size_t k = 1; k <= g; ++k)
      if (j != k) out.push_back({RootKind::X, j, k, t});
  for (RootKind kind : {RootKind::Y, RootKind::Z})
    for (std::size_t j = 1; j <= g; ++j)
      for (std::size_t k = j + 1; k <= g; ++k) out.push_back({kind, j, k, t});
  return out;
}

SpMatrix root_matrix(const RootSpec& s, std::size_t g) {
  if (!valid_root_spec(s, g)) throw RangeError("root spec " + to_string(s) + " out of range");
  const std::size_t n = 2 * g;
  const Integer t(static_cast<long>(s.t));
  const std::size_t j = s.j;
  const std::size_t k = s.k;
  IntMatrix nil;
  switch (s.kind) {
    case RootKind::V: nil = E(n, j, g + j); break;
    case RootKind::W: nil = E(n, g + j, j); break;
    case RootKind::X: nil = E(n, j, k) - E(n, g + k, g + j); break;
    case RootKind::Y: nil = E(n, g + j, k) + E(n, g + k, j); break;
    case RootKind::Z: nil = E(n, j, g + k) + E(n, k, g + j); break;
  }
  return SpMatrix(IntMatrix::identity(n) + t * nil, g);
}

SpMatrix d_matrix(std::size_t i, std::size_t g) {
  if (i < 1 || i + 1 > g) throw RangeError("D_i needs 1 <= i <= g-1");
  const IntMatrix r = rot(i + 1, g);
  const IntMatrix r_inv = sp_inverse(SpMatrix(r, g)).matrix();
  return SpMatrix(gen_power('A', i, 2, g) * gen_power('B', i + 1, 2, g) * r * gen_power('C', i, 2, g) * r_inv, g);
}

SpMatrix d_prime_matrix(std::size_t i, std::size_t g) {
  if (i < 2 || i > g) throw RangeError("D'_i needs 2 <= i <= g");
  const IntMatrix r = rot(i - 1, g);
  const IntMatrix r_inv = sp_inverse(SpMatrix(r, g)).matrix();
  return SpMatrix(r * gen_power('C', i - 1, -2, g) * r_inv * gen_power('B', i - 1, -2, g) * gen_power('A', i, -2, g),
                  g);
}

GenWord::GenWord(std::size_t genus, std::vector<GenLetter> letters) : genus_(genus) {
  if (genus < 2) throw DimensionError("generator word: genus must be at least 2");
  letters_.reserve(letters.size());
  for (const auto& l : letters) append(l);
}

std::size_t GenWord::syllables() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (i == 0 || !(letters_[i] == letters_[i - 1])) ++n;
  return n;
}

void GenWord::append(const GenLetter& l) {
  if (!letter_ok(l, genus_))
    throw RangeError(std::string("generator ") + l.gen + std::to_string(l.index) + "^" + std::to_string(l.exponent) +
                     " invalid for genus " + std::to_string(genus_));
  letters_.push_back(l);
}

void GenWord::append(const GenWord& w) {
  if (w.genus_ != genus_) throw DimensionError("generator word: genus mismatch");
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

GenWord GenWord::inverse() const {
  GenWord out(genus_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, it->index, -it->exponent});
  return out;
}

GenWord GenWord::power(std::int64_t n) const {
  const GenWord base = n < 0 ? inverse() : *this;
  GenWord out(genus_);
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out.append(base);
  return out;
}

GenWord commutator(const GenWord& u, const GenWord& v) {
  GenWord out = u;
  out.append(v);
  out.append(u.inverse());
  out.append(v.inverse());
  return out;
}

GenWord parse_gen_word(std::string_view text, std::size_t genus) {
  GenWord w(genus);
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  while (true) {
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos >= n) break;
    const std::size_t start = pos;
    const char gen = text[pos];
    if (gen != 'A' && gen != 'B' && gen != 'C') throw ParseError(pos, "expected a generator A, B or C");
    ++pos;
    const std::size_t digits = pos;
    while (pos < n && is_digit(text[pos])) ++pos;
    std::size_t index = 0;
    if (pos == digits || std::from_chars(text.data() + digits, text.data() + pos, index).ec != std::errc{})
      throw ParseError(digits, "expected a generator index");
    int exponent = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      const std::size_t num = pos;
      if (pos < n && (text[pos] == '-' || text[pos] == '+')) ++pos;
      const std::size_t first = pos;
      while (pos < n && is_digit(text[pos])) ++pos;
      const char* b = text.data() + num + (text[num] == '+' ? 1 : 0);
      if (pos == first || std::from_chars(b, text.data() + pos, exponent).ec != std::errc{})
        throw ParseError(num, "expected an exponent");
    }
    if (pos < n && !is_space(text[pos])) throw ParseError(pos, "unexpected character");
    const GenLetter l{gen, index, exponent};
    if (!letter_ok(l, genus))
      throw ParseError(start, "generator not in the generating set for genus " + std::to_string(genus));
    w.append(l);
  }
  return w;
}

std::string format_gen_word(const GenWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    out += std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

SpMatrix gen_letter_matrix(const GenLetter& l, std::size_t genus) {
  if (!letter_ok(l, genus)) throw RangeError("generator letter out of range");
  return SpMatrix(gen_power(l.gen, l.index, l.exponent, genus), genus);
}

SpMatrix eval_gen_word(const GenWord& w) {
  const std::size_t g = w.genus();
  const std::size_t n = 2 * g;
  IntMatrix m = IntMatrix::identity(n);
  // M <- M (I + e N), column operations.
  for (const auto& l : w.letters()) {
    const std::size_t i = l.index - 1;
    const long e = l.exponent;
    switch (l.gen) {
      case 'A':
        for (std::size_t r = 0; r < n; ++r) m(r, g + i) += e * m(r, i);
        break;
      case 'B':
        for (std::size_t r = 0; r < n; ++r) m(r, i) -= e * m(r, g + i);
        break;
      default:
        for (std::size_t r = 0; r < n; ++r) {
          const Integer diff = m(r, i + 1) - m(r, i);
          m(r, g + i) += e * diff;
          m(r, g + i + 1) -= e * diff;
        }
        break;
    }
  }
  return SpMatrix(std::move(m), g);
}

namespace {

GenWord letters(std::size_t g, std::initializer_list<GenLetter> ls) { return GenWord(g, std::vector<GenLetter>(ls)); }

GenWord rot_word(std::size_t i, std::size_t g) { return letters(g, {{'A', i, 1}, {'B', i, 1}, {'A', i, 1}}); }

// X_{j,j+l}^{2^l}
GenWord x_up(std::size_t j, std::size_t l, std::size_t g) {
  if (l == 1) return d_word(j, g);
  return commutator(x_up(j, l - 1, g), d_word(j + l - 1, g));
}

// X_{j,j-l}^{2^l}
GenWord x_down(std::size_t j, std::size_t l, std::size_t g) {
  if (l == 1) return d_prime_word(j, g).inverse();
  return commutator(x_down(j, l - 1, g), x_down(j - l + 1, 1, g));
}

// Z_{k-l,k}^{2^l}
GenWord z_word(std::size_t k, std::size_t l, std::size_t g) {
  if (l == 1) {
    GenWord w = letters(g, {{'A', k, 1}});
    w.append(d_word(k - 1, g).inverse());
    w.append(letters(g, {{'A', k, -1}}));
    w.append(d_word(k - 1, g));
    w.append(letters(g, {{'A', k - 1, 1}}).power(4));
    return w;
  }
  return commutator(z_word(k, l - 1, g), d_word(k - l, g).inverse());
}

GenWord p_word(std::size_t g) {
  GenWord w(g);
  for (std::size_t i = 1; i <= g; ++i) w.append(rot_word(i, g));
  return w;
}

}  // namespace

GenWord d_word(std::size_t i, std::size_t g) {
  if (i < 1 || i + 1 > g) throw RangeError("D_i needs 1 <= i <= g-1");
  GenWord w = letters(g, {{'A', i, 1}, {'A', i, 1}, {'B', i + 1, 1}, {'B', i + 1, 1}});
  w.append(rot_word(i + 1, g));
  w.append(letters(g, {{'C', i, 2}}));
  w.append(rot_word(i + 1, g).inverse());
  return w;
}

GenWord d_prime_word(std::size_t i, std::size_t g) {
  if (i < 2 || i > g) throw RangeError("D'_i needs 2 <= i <= g");
  GenWord w = rot_word(i - 1, g);
  w.append(letters(g, {{'C', i - 1, -2}}));
  w.append(rot_word(i - 1, g).inverse());
  w.append(letters(g, {{'B', i - 1, -1}, {'B', i - 1, -1}, {'A', i, -1}, {'A', i, -1}}));
  return w;
}

std::int64_t base_exponent(const RootSpec& s) {
  if (s.kind == RootKind::V || s.kind == RootKind::W) return 1;
  const std::size_t gap = s.j > s.k ? s.j - s.k : s.k - s.j;
  return std::int64_t{1} << gap;
}

GenWord synthesize_root(const RootSpec& s, std::size_t g) {
  if (!valid_root_spec(s, g)) throw RangeError("root spec " + to_string(s) + " out of range");
  const std::int64_t base = base_exponent(s);
  if (s.t == 0 || s.t % base != 0)
    throw std::invalid_argument("cannot synthesize " + to_string(s) + ": t must be a nonzero multiple of " +
                                std::to_string(base));
  const std::int64_t reps = s.t / base;
  switch (s.kind) {
    case RootKind::V: return letters(g, {{'A', s.j, 1}}).power(reps);
    case RootKind::W: return letters(g, {{'B', s.j, 1}}).power(-reps);
    case RootKind::X:
      return (s.j < s.k ? x_up(s.j, s.k - s.j, g) : x_down(s.j, s.j - s.k, g)).power(reps);
    case RootKind::Z: return z_word(s.k, s.k - s.j, g).power(reps);
    case RootKind::Y: {
      GenWord w = p_word(g);
      w.append(z_word(s.k, s.k - s.j, g).power(-reps));
      w.append(p_word(g).inverse());
      return w;
    }
  }
  throw std::logic_error("unreachable");
}

bool mod2_block_test(const SpMatrix& sm) {
  const std::size_t g = sm.genus();
  const IntMatrix& m = sm.matrix();
  auto block = [g](std::size_t r) { return r < g ? r : r - g; };
  for (std::size_t r = 0; r < 2 * g; ++r)
    for (std::size_t c = 0; c < 2 * g; ++c)
      if (block(r) != block(c) && mpz_odd_p(m(r, c).get_mpz_t())) return false;
  return true;
}

}  // namespace twistcert
