#include "twistcert/membership.hpp"

#include <mutex>

#include "twistcert/twist_word.hpp"

namespace twistcert {

const char* to_string(Membership m) {
  switch (m) {
    case Membership::in_gamma: return "InGamma";
    case Membership::not_in_gamma: return "NotInGamma";
    case Membership::unknown: return "Unknown";
  }
  return "Unknown";
}

const ClosureTable& shared_closure(const std::string& cache_path) {
  static std::once_flag once;
  static std::optional<ClosureTable> table;
  std::call_once(once, [&] { table.emplace(closure_cached(cache_path)); });
  return *table;
}

namespace {

bool congruent_to_identity(const IntMatrix& m, std::uint64_t q) { return reduce_mod(m, q).is_identity(); }

// The root spec whose matrix is m, if any.
std::optional<RootSpec> recognize_root(const SpMatrix& m) {
  const std::size_t g = m.genus();
  const IntMatrix& a = m.matrix();
  // The parameter t of each candidate is read off one entry.
  for (const RootSpec& base : all_root_specs(g, 1)) {
    std::size_t r = 0, c = 0;
    switch (base.kind) {
      case RootKind::V: r = base.j - 1, c = g + base.j - 1; break;
      case RootKind::W: r = g + base.j - 1, c = base.j - 1; break;
      case RootKind::X: r = base.j - 1, c = base.k - 1; break;
      case RootKind::Y: r = g + base.j - 1, c = base.k - 1; break;
      case RootKind::Z: r = base.j - 1, c = g + base.k - 1; break;
    }
    const Integer& t = a(r, c);
    if (t == 0 || !t.fits_slong_p()) continue;
    RootSpec s = base;
    s.t = t.get_si();
    if (root_matrix(s, g) == m) return s;
  }
  return std::nullopt;
}

// C_i^e with e even, read off entry (i, g+i) = -e.
std::optional<GenWord> even_c_power(const SpMatrix& m) {
  const std::size_t g = m.genus();
  for (std::size_t i = 1; i < g; ++i) {
    const Integer& v = m.matrix()(i - 1, g + i - 1);
    if (v == 0 || !v.fits_slong_p()) continue;
    const std::int64_t e = -v.get_si();
    if (e % 2 != 0 || e > (1 << 20) || e < -(1 << 20)) continue;
    if (letter_power({CurveKind::c, i}, e, g) != m.matrix()) continue;
    const GenLetter step{'C', i, e > 0 ? 2 : -2};
    return GenWord(g, std::vector<GenLetter>(static_cast<std::size_t>((e > 0 ? e : -e) / 2), step));
  }
  return std::nullopt;
}

}  // namespace

MembershipResult membership(const SpMatrix& m, const ClosureTable* table, const GenWord* witness) {
  const std::size_t g = m.genus();
  if (g == 2) {
    const ClosureTable& t = table ? *table : shared_closure();
    MembershipResult r;
    r.method = "closure";
    r.verdict = t.contains(m.matrix()) ? Membership::in_gamma : Membership::not_in_gamma;
    if (r.verdict == Membership::in_gamma && witness && eval_gen_word(*witness) == m) r.witness = *witness;
    return r;
  }
  if (!mod2_block_test(m)) return {Membership::not_in_gamma, "mod2_block", std::nullopt};
  if (witness && witness->genus() == g && eval_gen_word(*witness) == m)
    return {Membership::in_gamma, "witness", *witness};
  if (2 * g - 2 < 63 && congruent_to_identity(m.matrix(), std::uint64_t{1} << (2 * g - 2)))
    return {Membership::in_gamma, "congruence", std::nullopt};
  if (const auto spec = recognize_root(m)) {
    if (spec->t % base_exponent(*spec) == 0)
      return {Membership::in_gamma, "root_synthesis", synthesize_root(*spec, g)};
  }
  if (auto w = even_c_power(m)) return {Membership::in_gamma, "generator_power", std::move(w)};
  return {Membership::unknown, "none", std::nullopt};
}

}  // namespace twistcert
