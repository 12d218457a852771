#include "twistcert/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>

#include "twistcert/errors.hpp"

namespace twistcert {
namespace {

void require_monic_in_range(const IntPoly& p, long max_degree) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (!p.is_monic()) throw std::invalid_argument("factorization requires a monic polynomial");
  if (p.degree() > max_degree) {
    throw DegreeBoundError("degree " + std::to_string(p.degree()) + " exceeds bound " +
                           std::to_string(max_degree));
  }
}

// ---------------------------------------------------------------------------
// Polynomials over Q, used only for the squarefree decomposition.

using QPoly = std::vector<mpq_class>;

void q_trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long q_deg(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

QPoly to_q(const IntPoly& p) {
  QPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

IntPoly to_int(const QPoly& a) {
  std::vector<Integer> c;
  for (auto x : a) {
    x.canonicalize();
    if (x.get_den() != 1) throw std::logic_error("squarefree part left Z[x]");
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

void q_make_monic(QPoly& a) {
  if (a.empty()) return;
  const mpq_class lead = a.back();
  for (auto& x : a) x /= lead;
}

std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
  const long db = q_deg(b);
  if (q_deg(a) < db) return {QPoly{}, a};
  QPoly q(static_cast<std::size_t>(q_deg(a) - db + 1));
  for (long k = q_deg(a) - db; k >= 0; --k) {
    const mpq_class coef = a[static_cast<std::size_t>(k + db)] / b.back();
    q[static_cast<std::size_t>(k)] = coef;
    for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(k + j)] -= coef * b[static_cast<std::size_t>(j)];
  }
  q_trim(a);
  q_trim(q);
  return {q, a};
}

QPoly q_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = q_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  q_make_monic(a);
  return a;
}

QPoly q_derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
  q_trim(d);
  return d;
}

QPoly q_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  q_trim(a);
  return a;
}

// Yun's algorithm; returns (squarefree factor, multiplicity) pairs.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const QPoly fq = to_q(f);
  const QPoly df = q_derivative(fq);
  const QPoly a0 = q_gcd(fq, df);
  QPoly b = q_divmod(fq, a0).first;
  QPoly c = q_divmod(df, a0).first;
  QPoly d = q_sub(c, q_derivative(b));
  unsigned i = 1;
  while (q_deg(b) > 0) {
    QPoly a = q_gcd(b, d);
    if (q_deg(a) > 0) out.emplace_back(to_int(a), i);
    b = q_divmod(b, a).first;
    c = q_divmod(d, a).first;
    d = q_sub(c, q_derivative(b));
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31.

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static long deg(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }

  FpPoly from(const IntPoly& f) const {
    FpPoly out;
    const Integer q(static_cast<unsigned long>(p));
    Integer r;
    for (const auto& c : f.coefficients()) {
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
      out.push_back(r.get_ui());
    }
    trim(out);
    return out;
  }

  FpPoly add(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = add(a[k], b[k]);
    trim(a);
    return a;
  }
  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = sub(a[k], b[k]);
    trim(a);
    return a;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    const long db = deg(b);
    if (deg(a) < db) return {FpPoly{}, a};
    const std::uint64_t lead_inv = inv(b.back());
    FpPoly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
    for (long k = deg(a) - db; k >= 0; --k) {
      const std::uint64_t coef = mul(a[static_cast<std::size_t>(k + db)], lead_inv);
      q[static_cast<std::size_t>(k)] = coef;
      if (!coef) continue;
      for (long j = 0; j <= db; ++j) {
        auto& slot = a[static_cast<std::size_t>(k + j)];
        slot = sub(slot, mul(coef, b[static_cast<std::size_t>(j)]));
      }
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    const std::uint64_t li = inv(a.back());
    for (auto& x : a) x = mul(x, li);
    return a;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Returns (g, s, t) with s a + t b = g monic.
  std::tuple<FpPoly, FpPoly, FpPoly> ext_gcd(FpPoly a, FpPoly b) const {
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t li = inv(a.back());
    for (auto& x : a) x = mul(x, li);
    for (auto& x : s0) x = mul(x, li);
    for (auto& x : t0) x = mul(x, li);
    return {a, s0, t0};
  }
  FpPoly derivative(const FpPoly& a) const {
    FpPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(mul(a[k], k % p));
    trim(d);
    return d;
  }
  FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& modulus) const {
    FpPoly result{1};
    base = rem(base, modulus);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = bits; b-- > 0;) {
      result = rem(mul(result, result), modulus);
      if (mpz_tstbit(e.get_mpz_t(), b)) result = rem(mul(result, base), modulus);
    }
    return result;
  }

  // Distinct-degree factorization of a monic squarefree polynomial.
  std::vector<std::pair<FpPoly, long>> distinct_degree(FpPoly f) const {
    std::vector<std::pair<FpPoly, long>> out;
    const FpPoly x{0, 1};
    FpPoly h = x;
    const Integer pz(static_cast<unsigned long>(p));
    for (long d = 1; 2 * d <= deg(f); ++d) {
      h = powmod(h, pz, f);
      FpPoly g = gcd(f, sub(h, x));
      if (deg(g) > 0) {
        out.emplace_back(g, d);
        f = divmod(f, g).first;
        h = rem(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
  }

  // Cantor-Zassenhaus equal-degree splitting.
  void equal_degree(const FpPoly& f, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
    if (deg(f) == d) {
      out.push_back(f);
      return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    for (;;) {
      FpPoly a(static_cast<std::size_t>(deg(f)));
      for (auto& c : a) c = coef(rng);
      trim(a);
      if (deg(a) < 1) continue;
      FpPoly g = gcd(f, a);
      if (deg(g) == 0) g = gcd(f, sub(powmod(a, e, f), FpPoly{1}));
      if (deg(g) > 0 && deg(g) < deg(f)) {
        equal_degree(g, d, rng, out);
        equal_degree(monic(divmod(f, g).first), d, rng, out);
        return;
      }
    }
  }

  std::vector<FpPoly> factor_squarefree(const FpPoly& f) const {
    std::mt19937_64 rng(0x5eed5eedULL ^ p);
    std::vector<FpPoly> out;
    for (auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Hensel lifting and recombination.

IntPoly from_fp(const FpPoly& a) {
  std::vector<Integer> c;
  for (auto x : a) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

IntPoly reduce_coeffs(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c;
  Integer r;
  for (const auto& x : f.coefficients()) {
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    c.push_back(r);
  }
  return IntPoly(std::move(c));
}

IntPoly symmetric_coeffs(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c;
  for (const auto& x0 : f.coefficients()) {
    Integer x;
    mpz_fdiv_r(x.get_mpz_t(), x0.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
    c.push_back(x);
  }
  return IntPoly(std::move(c));
}

// Lifts f = g h (mod p) to f = G H (mod p^k), G and H monic.
std::pair<IntPoly, IntPoly> hensel_lift_pair(const IntPoly& f, const FpPoly& g0, const FpPoly& h0,
                                             const Fp& fp, unsigned k) {
  auto [one, s, t] = fp.ext_gcd(g0, h0);
  if (Fp::deg(one) != 0) throw std::logic_error("Hensel lift on non-coprime factors");
  IntPoly g = from_fp(g0);
  IntPoly h = from_fp(h0);
  const Integer p(static_cast<unsigned long>(fp.p));
  Integer m = p;
  for (unsigned step = 1; step < k; ++step) {
    const IntPoly diff = f - g * h;
    std::vector<Integer> ec;
    for (const auto& c : diff.coefficients()) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
      ec.push_back(q);
    }
    const FpPoly e = fp.from(IntPoly(std::move(ec)));
    const FpPoly dg = fp.rem(fp.mul(t, e), g0);
    const FpPoly dh = fp.rem(fp.mul(s, e), h0);
    g += m * from_fp(dg);
    h += m * from_fp(dh);
    m *= p;
  }
  return {g, h};
}

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<FpPoly>& factors, const Fp& fp,
                                 unsigned k, const Integer& modulus) {
  if (factors.size() == 1) return {reduce_coeffs(f, modulus)};
  FpPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = fp.mul(rest, factors[i]);
  auto [g, h] = hensel_lift_pair(f, factors[0], rest, fp, k);
  std::vector<IntPoly> out{g};
  const std::vector<FpPoly> tail(factors.begin() + 1, factors.end());
  for (auto& x : hensel_lift(h, tail, fp, k, modulus)) out.push_back(std::move(x));
  return out;
}

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factor a monic squarefree polynomial of degree >= 1.
std::vector<IntPoly> zassenhaus_squarefree(const IntPoly& f) {
  if (f.degree() == 1) return {f};

  // Pick the prime, among the first few that keep f squarefree, giving the
  // fewest modular factors.
  constexpr int kCandidatePrimes = 5;
  std::vector<FpPoly> best;
  Fp best_fp{0};
  int tried = 0;
  for (std::uint64_t p = 3; tried < kCandidatePrimes; p += 2) {
    if (!is_prime_small(p)) continue;
    const Fp fp{p};
    const FpPoly fbar = fp.from(f);
    if (Fp::deg(fbar) != f.degree()) continue;
    if (Fp::deg(fp.gcd(fbar, fp.derivative(fbar))) != 0) continue;
    ++tried;
    auto fs = fp.factor_squarefree(fbar);
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      best_fp = fp;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Mignotte: any factor coefficient is at most 2^n ||f||_2.
  Integer norm_sq = 0;
  for (const auto& c : f.coefficients()) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Integer bound;
  mpz_mul_2exp(bound.get_mpz_t(), norm.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()) + 1);

  const Integer p(static_cast<unsigned long>(best_fp.p));
  Integer modulus = p;
  unsigned k = 1;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  std::vector<IntPoly> lifted = hensel_lift(f, best, best_fp, k, modulus);
  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      IntPoly cand{1};
      for (auto i : idx) cand = reduce_coeffs(cand * lifted[i], modulus);
      cand = symmetric_coeffs(cand, modulus);
      if (cand.is_monic()) {
        auto [q, rem] = divmod_monic(rest, cand);
        if (rem.is_zero()) {
          out.push_back(cand);
          rest = q;
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = subset;
      while (pos > 0 && idx[pos - 1] == r - subset + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Direct search.

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct SearchContext {
  const IntPoly& f;
  long degree;
  std::vector<Integer> nodes;
  std::vector<std::vector<Integer>> value_choices;
  std::vector<Integer> coefficient_bound;
  std::vector<std::vector<Integer>> dd;  // dd[i][j] divided differences
  IntPoly found;

  bool descend(std::size_t level) {
    const std::size_t d = static_cast<std::size_t>(degree);
    if (level == d) return accept();
    Integer x_pow;
    mpz_pow_ui(x_pow.get_mpz_t(), nodes[level].get_mpz_t(), d);
    for (const auto& v : value_choices[level]) {
      auto& row = dd[level];
      row.assign(level + 1, Integer(0));
      row[0] = v - x_pow;
      bool ok = true;
      for (std::size_t j = 1; j <= level && ok; ++j) {
        const Integer num = row[j - 1] - dd[level - 1][j - 1];
        const Integer den = nodes[level] - nodes[level - j];
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
          ok = false;
        } else {
          mpz_divexact(row[j].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
      }
      if (ok && descend(level + 1)) return true;
    }
    return false;
  }

  bool accept() {
    const std::size_t d = static_cast<std::size_t>(degree);
    // Newton form -> monomial form.
    IntPoly h;
    IntPoly basis{1};
    for (std::size_t j = 0; j < d; ++j) {
      h += dd[j][j] * basis;
      basis = basis * IntPoly(std::vector<Integer>{-nodes[j], Integer(1)});
    }
    IntPoly g = h + IntPoly::monomial(d);
    for (std::size_t j = 0; j <= d; ++j)
      if (abs(g.coefficient(j)) > coefficient_bound[j]) return false;
    if (!divides_monic(g, f)) return false;
    found = std::move(g);
    return true;
  }
};

// A monic factor of f of exactly degree d, assuming none of smaller degree.
std::optional<IntPoly> search_factor_of_degree(const IntPoly& f, long d) {
  if (d == 1) {
    const Integer c0 = f.coefficient(0);
    if (c0 == 0) return IntPoly{0, 1};
    const Integer mag = abs(c0);
    if (!mag.fits_slong_p()) throw DegreeBoundError("constant term too large for direct search");
    for (auto div : positive_divisors(mag.get_si())) {
      for (long sgn : {1L, -1L}) {
        const Integer r(sgn * div);
        if (f.evaluate(r) == 0) return IntPoly(std::vector<Integer>{-r, Integer(1)});
      }
    }
    return std::nullopt;
  }

  // No integer roots remain, so f(x) != 0 at every integer node.
  constexpr long kNodeRange = 16;
  const Integer kValueCap(1'000'000'000'000L);
  struct Node {
    long x;
    std::int64_t value;
    std::size_t divisor_count;
  };
  std::vector<Node> candidates;
  for (long x = -kNodeRange; x <= kNodeRange; ++x) {
    const Integer v = abs(f.evaluate(Integer(x)));
    if (v == 0 || v > kValueCap) continue;
    const std::int64_t vv = v.get_si();
    candidates.push_back({x, vv, positive_divisors(vv).size()});
  }
  if (candidates.size() < static_cast<std::size_t>(d)) {
    throw DegreeBoundError("polynomial values too large for direct search");
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Node& a, const Node& b) {
    if (a.divisor_count != b.divisor_count) return a.divisor_count < b.divisor_count;
    return std::abs(a.x) < std::abs(b.x);
  });

  Integer norm_sq = 0;
  for (const auto& c : f.coefficients()) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  if (norm * norm < norm_sq) norm += 1;

  SearchContext ctx{f, d, {}, {}, {}, std::vector<std::vector<Integer>>(static_cast<std::size_t>(d)), {}};
  for (long j = 0; j <= d; ++j)
    ctx.coefficient_bound.push_back(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)) * norm);
  for (long i = 0; i < d; ++i) {
    const Node& n = candidates[static_cast<std::size_t>(i)];
    ctx.nodes.emplace_back(n.x);
    std::vector<Integer> choices;
    for (auto dv : positive_divisors(n.value)) {
      choices.emplace_back(dv);
      choices.emplace_back(-dv);
    }
    ctx.value_choices.push_back(std::move(choices));
  }
  if (ctx.descend(0)) return ctx.found;
  return std::nullopt;
}

}  // namespace

std::vector<IntPoly> factor_over_Z(const IntPoly& p) {
  require_monic_in_range(p, kMaxFactorDegree);
  std::vector<IntPoly> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& f : zassenhaus_squarefree(part))
      for (unsigned k = 0; k < mult; ++k) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<IntPoly> factor_by_search(const IntPoly& p) {
  require_monic_in_range(p, 12);
  std::vector<IntPoly> out;
  IntPoly rest = p;
  while (rest.degree() > 0) {
    std::optional<IntPoly> factor;
    for (long d = 1; 2 * d <= rest.degree() && !factor; ++d) factor = search_factor_of_degree(rest, d);
    if (!factor) factor = rest;
    rest = divmod_monic(rest, *factor).first;
    out.push_back(std::move(*factor));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  return factor_over_Z(p).size() == 1;
}

namespace {

unsigned long totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_memo(unsigned long n, std::map<unsigned long, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly acc = IntPoly::monomial(n) - IntPoly{1};
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) acc = divmod_monic(acc, cyclotomic_memo(d, memo)).first;
  memo.emplace(n, acc);
  return acc;
}

}  // namespace

IntPoly cyclotomic(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  std::map<unsigned long, IntPoly> memo;
  return cyclotomic_memo(n, memo);
}

CyclotomicDecomposition cyclotomic_decomposition(const IntPoly& p) {
  CyclotomicDecomposition out;
  if (p.is_zero() || !p.is_monic()) return out;
  const auto deg = static_cast<unsigned long>(p.degree());
  std::map<unsigned long, IntPoly> memo;
  IntPoly rest = p;
  const unsigned long limit = std::max<unsigned long>(2 * deg * deg, 2);
  for (unsigned long n = 1; n <= limit && rest.degree() > 0; ++n) {
    if (totient(n) > static_cast<unsigned long>(rest.degree())) continue;
    const IntPoly phi = cyclotomic_memo(n, memo);
    for (;;) {
      auto [q, r] = divmod_monic(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      out.indices.push_back(n);
    }
  }
  out.is_product = rest == IntPoly{1};
  return out;
}

bool is_cyclotomic_product(const IntPoly& p) { return cyclotomic_decomposition(p).is_product; }

IntPoly monic_reverse(const IntPoly& f) {
  IntPoly r = f.reversed();
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

bool is_symplectically_irreducible(const IntPoly& p) {
  if (!is_reciprocal(p)) throw NotReciprocalError("polynomial is not a coefficient palindrome");
  if (p.degree() <= 0) return true;
  const auto factors = factor_over_Z(p);
  std::vector<std::pair<IntPoly, unsigned>> distinct;
  for (const auto& f : factors) {
    if (!distinct.empty() && distinct.back().first == f) {
      ++distinct.back().second;
    } else {
      distinct.emplace_back(f, 1);
    }
  }
  auto multiplicity = [&](const IntPoly& f) -> unsigned {
    for (const auto& [g, m] : distinct)
      if (g == f) return m;
    return 0;
  };
  // A reciprocal divisor is a sub-multiset closed under f <-> monic_reverse(f).
  // Each self-paired factor copy, and each copy of a {f, rev f} pair, is one
  // indivisible unit; a proper reciprocal divisor exists iff there are >= 2.
  unsigned units = 0;
  for (const auto& [f, m] : distinct) {
    const IntPoly r = monic_reverse(f);
    if (r == f) {
      units += m;
    } else if (canonical_less(f, r)) {
      units += std::min(m, multiplicity(r));
    }
  }
  return units <= 1;
}

}  // namespace twistcert
