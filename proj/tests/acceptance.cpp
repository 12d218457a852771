// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twistcert/certify.hpp"
#include "twistcert/closure.hpp"
#include "twistcert/factor.hpp"
#include "twistcert/identities.hpp"
#include "twistcert/membership.hpp"
#include "twistcert/root_subgroups.hpp"
#include "twistcert/surgery.hpp"
#include "twistcert/twist_word.hpp"

using namespace twistcert;

namespace {

// Pinned after the first verified run: the image of Gamma mod 4 is the full
// preimage of the block-diagonal subgroup of Sp(4, F_2).
constexpr std::size_t kPinnedImageOrder = 36864;
constexpr long kPinnedIndex = 20;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

IntMatrix E(std::size_t n, std::size_t i, std::size_t j) { return IntMatrix::elementary(n, i, j); }

IntMatrix J(std::size_t g) {
  IntMatrix j(2 * g);
  for (std::size_t i = 1; i <= g; ++i) {
    j = j + E(2 * g, i, g + i);
    j = j - E(2 * g, g + i, i);
  }
  return j;
}

// Generator matrices written out from their definitions.
IntMatrix gen_oracle(char kind, std::size_t i, std::size_t g) {
  const std::size_t n = 2 * g;
  IntMatrix m = IntMatrix::identity(n);
  switch (kind) {
    case 'a': return m + E(n, i, g + i);
    case 'b': return m - E(n, g + i, i);
    case 'c': return m - E(n, i, g + i) - E(n, i + 1, g + i + 1) + E(n, i + 1, g + i) + E(n, i, g + i + 1);
    default: return m;
  }
}

IntMatrix power_oracle(const IntMatrix& m, std::int64_t e) {
  const std::size_t n = m.dim();
  IntMatrix base = m, acc = IntMatrix::identity(n);
  if (e < 0) {
    // Every generator is I + N with N^2 = 0.
    base = IntMatrix::identity(n) + IntMatrix::identity(n) - m;
    e = -e;
  }
  for (std::int64_t k = 0; k < e; ++k) acc = oracle::naive_mul(acc, base);
  return acc;
}

// Twist words act by the reverse product.
IntMatrix twist_eval_oracle(const TwistWord& w) {
  const std::size_t g = w.genus();
  IntMatrix acc = IntMatrix::identity(2 * g);
  for (const Syllable& s : w.letters())
    acc = oracle::naive_mul(power_oracle(gen_oracle(kind_char(s.curve.kind), s.curve.index, g), s.exponent), acc);
  return acc;
}

// Generator words act by the literal product.
IntMatrix gen_eval_oracle(const GenWord& w) {
  const std::size_t g = w.genus();
  IntMatrix acc = IntMatrix::identity(2 * g);
  for (const GenLetter& l : w.letters()) {
    const char k = static_cast<char>(l.gen - 'A' + 'a');
    acc = oracle::naive_mul(acc, power_oracle(gen_oracle(k, l.index, g), l.exponent));
  }
  return acc;
}

IntMatrix root_oracle(const RootSpec& s, std::size_t g) {
  const std::size_t n = 2 * g, j = s.j, k = s.k;
  const Integer t(static_cast<long>(s.t));
  IntMatrix nil(n);
  switch (s.kind) {
    case RootKind::V: nil = E(n, j, g + j); break;
    case RootKind::W: nil = E(n, g + j, j); break;
    case RootKind::X: nil = E(n, j, k) - E(n, g + k, g + j); break;
    case RootKind::Y: nil = E(n, g + j, k) + E(n, g + k, j); break;
    case RootKind::Z: nil = E(n, j, g + k) + E(n, k, g + j); break;
  }
  return IntMatrix::identity(n) + t * nil;
}

bool symplectic_oracle(const IntMatrix& m, std::size_t g) {
  return oracle::naive_mul(oracle::naive_mul(m.transpose(), J(g)), m) == J(g);
}

std::vector<IntPoly> sorted(std::vector<IntPoly> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

bool criterion_example(Check& c) {
  const TwistWord w = parse_word("d1^-2 c1^-2 a1 d1^-2 b2 b1", 2);
  const IntMatrix expect = IntMatrix::from_rows(std::vector<std::vector<long>>{
      {1, 0, 3, -2}, {0, 1, -2, 2}, {-1, 0, -2, 2}, {0, -1, 2, -1}});
  const SpMatrix m = eval_word(w);
  c.require(m.matrix() == expect, "eval matrix");
  c.require(twist_eval_oracle(w) == expect, "oracle matrix");
  const IntPoly chi{1, 1, -2, 1, 1};
  c.require(charpoly(m.matrix()) == chi, "charpoly");
  c.require(oracle::charpoly_by_minors(expect) == chi, "oracle charpoly");
  const CertReport r = certify_report(w);
  c.require(r.anosov == Tristate::yes, "anosov");
  c.require(r.pa.certified(), "CertifiedPA");
  c.note << "16/16 entries, chi = " << to_string(chi);
  return c.ok;
}

bool criterion_identities(Check& c) {
  std::size_t total = 0;
  for (std::size_t g = 2; g <= 6; ++g) {
    const IdentityReport r = verify_identities(g);
    total += r.checks.size();
    c.require(r.all_passed(), "genus " + std::to_string(g) + " has failures");
    const std::size_t tri = (g - 1) * (g - 2) / 2;
    c.require(r.family("vw_generators").size() > 0, "vw_generators present");
    c.require(r.family("x_adjacent").size() == g - 1, "x_adjacent count");
    c.require(r.family("x_adjacent_down").size() == g - 1, "x_adjacent_down count");
    c.require(r.family("x_ladder").size() == tri, "x_ladder covers 1 <= j < j+l <= g-1");
    c.require(g < 4 || r.family("x_ladder_down").size() > 0, "x_ladder_down present");
    c.require(r.family("z_adjacent").size() == g - 1, "z_adjacent covers 2 <= k <= g");
    c.require(r.family("z_ladder").size() == tri, "z_ladder covers 2 <= l < k");
    c.require(r.family("y_conjugate").size() == g * (g - 1) / 2, "y_conjugate covers j < k");
    c.require(r.family("rotation").size() == g, "rotation count");
    c.require(r.family("product_is_J").size() == 1, "product_is_J");
    c.require(r.family("chain_relation").size() == g - 1, "chain_relation count");
  }
  c.note << total << " checks over g = 2..6";
  return c.ok;
}

bool criterion_synthesis(Check& c) {
  std::size_t specs = 0, longest = 0, letters = 0;
  for (std::size_t g = 2; g <= 5; ++g) {
    const std::int64_t t = std::int64_t{1} << (g - 1);
    for (const RootSpec& s : all_root_specs(g, t)) {
      const GenWord w = synthesize_root(s, g);
      const IntMatrix target = root_oracle(s, g);
      c.require(root_matrix(s, g).matrix() == target, "root_matrix " + to_string(s));
      c.require(eval_gen_word(w).matrix() == target, "eval " + to_string(s));
      if (g <= 3) c.require(gen_eval_oracle(w) == target, "oracle eval " + to_string(s));
      ++specs;
      letters += w.size();
      longest = std::max(longest, w.size());
    }
  }
  c.note << specs << " specs, " << letters << " letters total, longest word " << longest;
  return c.ok;
}

bool criterion_closure(Check& c) {
  const ClosureTable t = quotient_closure();
  const ClosureTable again = quotient_closure();
  const ClosureTable serial = quotient_closure_serial();
  c.require(737280 % t.size() == 0, "|image| divides 737280");
  c.require(t.elements() == again.elements() && t.elements() == serial.elements(), "stable across runs");
  c.require(generator_closed(t), "generator-closed");
  for (const RootSpec& s : all_root_specs(2, 2)) c.require(t.contains(root_oracle(s, 2)), "t=2 root " + to_string(s));
  c.require(membership(SpMatrix(gen_oracle('c', 1, 2), 2), &t).verdict == Membership::not_in_gamma, "C1 NotInGamma");
  c.require(membership(SpMatrix(root_oracle({RootKind::V, 1, 0, 4}, 2), 2), &t).verdict == Membership::in_gamma,
            "V1^4 InGamma");
  const IndexResult r = gamma_index(t);
  Integer bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), 64);
  c.require(r.index % 20 == 0 && r.index >= 20 && r.index <= bound, "index multiple of 20 in [20, 2^64]");
  c.require(t.size() == kPinnedImageOrder && r.index == kPinnedIndex, "pinned index");
  c.note << "|image| = " << t.size() << ", index = " << r.index.get_str();
  return c.ok;
}

bool criterion_surgery(Check& c) {
  for (std::int64_t k = -5; k <= 5; ++k) {
    const auto l = dehn_fried_equivalent_twist_order(0, k);
    c.require(std::holds_alternative<std::int64_t>(l) && std::get<std::int64_t>(l) == k, "twist 0 gives l = k");
    c.require(new_meridian_class(0, k) == sign_normalized({1, k, Longitude::surface}), "twist 0 meridian");
  }
  const std::vector<std::pair<std::int64_t, std::int64_t>> accepted{{1, 2}, {-1, -2}, {2, 1}, {-2, -1}};
  std::size_t rejected = 0;
  for (std::int64_t tw : {-2, -1, 1, 2})
    for (std::int64_t k = -3; k <= 3; ++k) {
      const bool listed = std::find(accepted.begin(), accepted.end(), std::make_pair(tw, k)) != accepted.end();
      const auto l = dehn_fried_equivalent_twist_order(tw, k);
      if (listed) {
        c.require(std::holds_alternative<std::int64_t>(l) && std::get<std::int64_t>(l) == -k, "listed pair gives l = -k");
        c.require(new_meridian_class(tw, k) == TorusClass{1, -k, Longitude::surface}, "listed pair meridian (1, -k)");
      } else {
        c.require(std::holds_alternative<EquivalenceRejection>(l), "unlisted pair rejected");
        ++rejected;
      }
      // mu + k(lambda_S - twist mu), hand-expanded.
      TorusClass hand{1 - k * tw, k, Longitude::surface};
      if (hand.mu < 0 || (hand.mu == 0 && hand.lam < 0)) hand = {-hand.mu, -hand.lam, Longitude::surface};
      c.require(new_meridian_class(tw, k) == hand, "hand-expanded meridian");
    }
  c.note << "4 accepted, " << rejected << " rejected";
  return c.ok;
}

bool criterion_round_trip(Check& c) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> e(-3, 3);
  std::uniform_int_distribution<int> coin(0, 1), nblocks(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t g = 2 + static_cast<std::size_t>(coin(rng));
    TDecomposition d;
    const int nb = nblocks(rng);
    for (int b = 0; b < nb; ++b) {
      TBlock blk;
      for (std::size_t i = 0; i < g; ++i) blk.p.push_back(e(rng));
      for (std::size_t i = 0; i < g; ++i) blk.q.push_back(e(rng));
      for (std::size_t i = 0; i + 1 < g; ++i) blk.r.push_back(coin(rng) ? -2 : 0);
      d.blocks.push_back(blk);
    }
    const TwistWord w = reassemble(d, g);
    const TValidation v = validate_family_T(w);
    c.require(std::holds_alternative<TDecomposition>(v), "word validates");
    if (!c.ok) break;
    const auto planned = plan_from_T_word(std::get<TDecomposition>(v), g);
    c.require(std::holds_alternative<SurgeryPlan>(planned), "plan built");
    if (!c.ok) break;
    const TwistWord back = monodromy_from_plan(std::get<SurgeryPlan>(planned));
    const TValidation v2 = validate_family_T(back);
    c.require(std::holds_alternative<TDecomposition>(v2) && std::get<TDecomposition>(v2) == d, "decomposition");
    c.require(eval_word(back).matrix() == eval_word(w).matrix(), "eval matrix");
    if (trial % 10 == 0) c.require(twist_eval_oracle(back) == twist_eval_oracle(w), "oracle eval matrix");
  }
  c.note << "500 words";
  return c.ok;
}

bool criterion_invariants(Check& c) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> pick(0, 2), sign(0, 1), len(1, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t g = 2 + static_cast<std::size_t>(trial % 3);
    GenWord w(g);
    const int n = len(rng);
    for (int t = 0; t < n; ++t) {
      const char kind = "ABC"[pick(rng)];
      std::uniform_int_distribution<std::size_t> idx(1, kind == 'C' ? g - 1 : g);
      const int s = sign(rng) ? 1 : -1;
      w.append({kind, idx(rng), kind == 'C' ? 2 * s : s});
    }
    const SpMatrix m = eval_gen_word(w);
    c.require(symplectic_oracle(m.matrix(), g), "symplectic");
    c.require(oracle::det_by_minors(m.matrix()) == 1, "det +1");
    const IntPoly chi = charpoly(m.matrix());
    c.require(is_reciprocal(chi), "charpoly reciprocal");
    if (g == 2) c.require(chi == oracle::charpoly_by_minors(m.matrix()), "charpoly oracle");
    c.require(oracle::naive_mul(eval_gen_word(w.inverse()).matrix(), m.matrix()) == IntMatrix::identity(2 * g), "inverse law");
    c.require(mod2_block_test(m), "mod2 block test");
    if (!c.ok) break;
  }
  c.note << "1000 words";
  return c.ok;
}

bool criterion_factor(Check& c) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> deg(1, 8), coef(-5, 5);
  std::size_t reducible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    std::vector<Integer> cs(static_cast<std::size_t>(n) + 1);
    cs[0] = cs[static_cast<std::size_t>(n)] = 1;
    for (int i = 1; 2 * i <= n; ++i) cs[static_cast<std::size_t>(i)] = cs[static_cast<std::size_t>(n - i)] = coef(rng);
    const IntPoly p(cs);
    const auto a = sorted(factor_over_Z(p));
    const auto b = sorted(factor_by_search(p));
    c.require(a == b, "factorizations of " + to_string(p) + " differ");
    IntPoly prod{1};
    for (const auto& f : a) prod = prod * f;
    c.require(prod == p, "factors multiply back to " + to_string(p));
    reducible += a.size() > 1;
  }
  c.note << "200 polynomials, " << reducible << " reducible";
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<bool(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example word end to end", 1, criterion_example},
      {2, "root-subgroup identity suite g=2..6", 10, criterion_identities},
      {3, "root synthesis soundness g=2..5", 30, criterion_synthesis},
      {4, "genus-2 quotient closure and index", 60, criterion_closure},
      {5, "surgery equivalence table", 1, criterion_surgery},
      {6, "planner round trip on random family words", 30, criterion_round_trip},
      {7, "invariants of random generator words", 60, criterion_invariants},
      {8, "Zassenhaus vs search factorization", 60, criterion_factor},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = cr.run(c);
    } catch (const std::exception& e) {
      c.note << "exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < cr.limit_s;
    if (!in_time) c.note << "; over time limit";
    const bool pass = ok && in_time;
    failed += !pass;
    std::printf("%s  criterion %d: %s  [%.3f s / limit %.0f s]  %s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, s,
                cr.limit_s, c.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
