#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "twistcert/closure.hpp"
#include "twistcert/errors.hpp"
#include "twistcert/identities.hpp"
#include "twistcert/membership.hpp"
#include "twistcert/root_subgroups.hpp"
#include "twistcert/twist_word.hpp"

using namespace twistcert;

namespace {

IntMatrix E(std::size_t n, std::size_t i, std::size_t j) { return IntMatrix::elementary(n, i, j); }
IntMatrix I(std::size_t n) { return IntMatrix::identity(n); }

SpMatrix gen(CurveKind k, std::size_t i, std::int64_t e, std::size_t g) { return SpMatrix(letter_power({k, i}, e, g), g); }

// Literal product of generator words computed with naive multiplication of
// explicitly built letter matrices.
IntMatrix oracle_gen_eval(const GenWord& w) {
  const std::size_t g = w.genus();
  IntMatrix acc = I(2 * g);
  for (const auto& l : w.letters()) {
    const CurveKind k = l.gen == 'A' ? CurveKind::a : l.gen == 'B' ? CurveKind::b : CurveKind::c;
    acc = oracle::naive_mul(acc, letter_power({k, l.index}, l.exponent, g));
  }
  return acc;
}

GenWord random_gen_word(std::mt19937_64& rng, std::size_t g, int len) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  GenWord w(g);
  for (int t = 0; t < len; ++t) {
    const int p = pick(rng);
    const int s = sign(rng) ? 1 : -1;
    const char c = "ABC"[p];
    std::uniform_int_distribution<std::size_t> idx(1, c == 'C' ? g - 1 : g);
    w.append({c, idx(rng), c == 'C' ? 2 * s : s});
  }
  return w;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_SUITE("congruence_lab") {
  TEST_CASE("root_matrix examples") {
    CHECK(root_matrix({RootKind::V, 1, 0, 1}, 2) == gen(CurveKind::a, 1, 1, 2));
    CHECK(root_matrix({RootKind::W, 1, 0, 1}, 2) == gen(CurveKind::b, 1, -1, 2));
    CHECK(root_matrix({RootKind::X, 1, 2, 2}, 2).matrix() == I(4) + Integer(2) * (E(4, 1, 2) - E(4, 4, 3)));
    CHECK_THROWS_AS(root_matrix({RootKind::Z, 2, 1, 1}, 2), RangeError);
    CHECK_THROWS_AS(root_matrix({RootKind::X, 2, 2, 1}, 3), RangeError);
    CHECK_THROWS_AS(root_matrix({RootKind::V, 3, 0, 1}, 2), RangeError);
  }

  TEST_CASE("root matrices form one-parameter subgroups") {
    for (std::size_t g = 2; g <= 4; ++g)
      for (const auto& s : all_root_specs(g, 3)) {
        RootSpec s2 = s;
        s2.t = 5;
        RootSpec s3 = s;
        s3.t = 8;
        CHECK(sp_multiply(root_matrix(s, g), root_matrix(s2, g)) == root_matrix(s3, g));
      }
  }

  TEST_CASE("d_matrix examples") {
    CHECK(d_matrix(1, 2).matrix() == I(4) + Integer(2) * (E(4, 1, 2) - E(4, 4, 3)));
    CHECK(d_matrix(1, 3).matrix() == I(6) + Integer(2) * (E(6, 1, 2) - E(6, 5, 4)));
    CHECK(d_matrix(2, 3).matrix() == I(6) + Integer(2) * (E(6, 2, 3) - E(6, 6, 5)));
    CHECK_THROWS_AS(d_matrix(2, 2), RangeError);
  }

  TEST_CASE("D_i acts on the basis as traced through its factors") {
    // e_{i+1} -> e_{i+1} + 2 e_i, e_{g+i} -> e_{g+i} - 2 e_{g+i+1}, others fixed.
    for (std::size_t g = 2; g <= 5; ++g)
      for (std::size_t i = 1; i < g; ++i) {
        const IntMatrix d = d_matrix(i, g).matrix();
        for (std::size_t col = 1; col <= 2 * g; ++col)
          for (std::size_t row = 1; row <= 2 * g; ++row) {
            Integer expect = row == col ? 1 : 0;
            if (col == i + 1 && row == i) expect = 2;
            if (col == g + i && row == g + i + 1) expect = -2;
            CHECK(d.entry1(row, col) == expect);
          }
      }
  }

  TEST_CASE("verify_identities for g = 2..6") {
    for (std::size_t g = 2; g <= 6; ++g) {
      const IdentityReport r = verify_identities(g);
      for (const auto& c : r.checks) {
        INFO(g, " ", c.family, " ", c.instance, " ", c.detail);
        CHECK(c.passed);
      }
      CHECK(r.family("x_adjacent").size() == g - 1);
      CHECK(r.family("z_adjacent").size() == g - 1);
      CHECK(r.family("chain_relation").size() == g - 1);
      CHECK(r.family("product_is_J").size() == 1);
    }
    const auto c3 = verify_identities(3).family("x_ladder");
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].instance == "j=1 l=1");
    CHECK(verify_identities(4).family("z_ladder").size() == 3);
  }

  TEST_CASE("chain relation holds only with the opposite c-orientation") {
    for (std::size_t g = 2; g <= 4; ++g)
      for (const auto& c : verify_identities(g).family("chain_relation")) {
        CHECK(c.detail.find("with C inverted") != std::string::npos);
        CHECK(c.detail.find("forward order,") == std::string::npos);
      }
  }

  TEST_CASE("GenWord text form") {
    const GenWord w = parse_gen_word("A1 A1^-1 B3 C2^2 C2^-2", 3);
    CHECK(w.size() == 5);
    CHECK(format_gen_word(w) == "A1 A1^-1 B3 C2^2 C2^-2");
    CHECK_THROWS_AS(parse_gen_word("C1", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("A1^2", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("A4", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("a1", 3), ParseError);
    CHECK_THROWS_AS(GenWord(2, {{'C', 1, 1}}), RangeError);
  }

  TEST_CASE("eval_gen_word agrees with the naive literal product") {
    std::mt19937_64 rng(101);
    for (std::size_t g = 2; g <= 4; ++g)
      for (int t = 0; t < 20; ++t) {
        const GenWord w = random_gen_word(rng, g, 15);
        CHECK(eval_gen_word(w).matrix() == oracle_gen_eval(w));
        CHECK(eval_gen_word(w.inverse()) == sp_inverse(eval_gen_word(w)));
      }
  }

  TEST_CASE("synthesize_root examples") {
    CHECK(format_gen_word(synthesize_root({RootKind::V, 1, 0, 2}, 2)) == "A1 A1");
    const GenWord d = synthesize_root({RootKind::X, 1, 2, 2}, 2);
    CHECK(d == d_word(1, 2));
    CHECK(d.size() == 11);
    CHECK(d.syllables() == 9);
    const GenWord x13 = synthesize_root({RootKind::X, 1, 3, 4}, 3);
    CHECK(x13 == commutator(d_word(1, 3), d_word(2, 3)));
    CHECK(eval_gen_word(x13).matrix() == I(6) + Integer(4) * (E(6, 1, 3) - E(6, 6, 4)));
    CHECK_THROWS_AS(synthesize_root({RootKind::X, 1, 3, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_root({RootKind::Z, 1, 2, 0}, 3), std::invalid_argument);
  }

  TEST_CASE("synthesized words evaluate to their root matrices") {
    for (std::size_t g = 2; g <= 5; ++g) {
      const std::int64_t t = std::int64_t{1} << (g - 1);
      for (std::int64_t tt : {t, -t}) {
        for (const auto& s : all_root_specs(g, tt)) {
          const GenWord w = synthesize_root(s, g);
          INFO(to_string(s), " g=", g);
          CHECK(eval_gen_word(w) == root_matrix(s, g));
        }
      }
    }
    // The naive product agrees on a few long ones.
    CHECK(oracle_gen_eval(synthesize_root({RootKind::Y, 1, 4, 8}, 4)) ==
          root_matrix({RootKind::Y, 1, 4, 8}, 4).matrix());
    CHECK(oracle_gen_eval(synthesize_root({RootKind::X, 4, 1, 8}, 4)) ==
          root_matrix({RootKind::X, 4, 1, 8}, 4).matrix());
  }

  TEST_CASE("mod2_block_test") {
    CHECK(mod2_block_test(gen(CurveKind::a, 1, 1, 2)));
    CHECK_FALSE(mod2_block_test(gen(CurveKind::c, 1, 1, 2)));
    CHECK(mod2_block_test(gen(CurveKind::c, 1, 2, 2)));
    std::mt19937_64 rng(7);
    for (std::size_t g = 2; g <= 4; ++g)
      for (int t = 0; t < 30; ++t) CHECK(mod2_block_test(eval_gen_word(random_gen_word(rng, g, 20))));
  }

  TEST_CASE("packing round trip and multiplication") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<unsigned> e(0, 3);
    for (int t = 0; t < 100; ++t) {
      ModMatrix a(4, 4), b(4, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
          a.set(r, c, e(rng));
          b.set(r, c, e(rng));
        }
      CHECK(unpack4(pack4(a)) == a);
      CHECK(unpack4(mul4(pack4(a), pack4(b))) == mod_mul(a, b));
    }
    CHECK(pack4(ModMatrix::identity(4, 4)) == kIdentity4);
  }

  TEST_CASE("PackedSet") {
    PackedSet s(4);
    std::mt19937_64 rng(9);
    std::unordered_set<Packed4> ref;
    for (int t = 0; t < 5000; ++t) {
      const Packed4 x = static_cast<Packed4>(rng() % 20000);
      CHECK(s.insert(x) == ref.insert(x).second);
    }
    CHECK(s.size() == ref.size());
    for (Packed4 x = 0; x < 20000; x += 7) CHECK(s.contains(x) == (ref.count(x) == 1));
    CHECK_FALSE(s.contains(0xFFFFFFFFu));
  }

  TEST_CASE("Sp(4, F_2) by brute force") {
    std::size_t sp = 0, block = 0;
    for (unsigned bits = 0; bits < (1u << 16); ++bits) {
      ModMatrix m(4, 2);
      for (unsigned k = 0; k < 16; ++k) m.set(k / 4, k % 4, (bits >> k) & 1u);
      if (!sp_check_mod(m, 2)) continue;
      ++sp;
      bool diag = true;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (m(r, c) && (r % 2) != (c % 2)) diag = false;
      block += diag;
    }
    CHECK(sp == 720);
    CHECK(block == 36);
    CHECK(sp_order_mod_power_of_two(2, 1) == 720);
    CHECK(sp_order_mod_power_of_two(2, 2) == 737280);
    CHECK(sp_order_mod_power_of_two(1, 1) == 6);
  }

  TEST_CASE("quotient closure") {
    const ClosureTable par = quotient_closure();
    const ClosureTable ser = quotient_closure_serial();
    CHECK(par.elements() == ser.elements());
    CHECK(par.contains(kIdentity4));
    CHECK(737280 % par.size() == 0);
    CHECK(generator_closed(par));
    for (Packed4 x : par.elements()) {
      const ModMatrix m = unpack4(x);
      REQUIRE(sp_check_mod(m, 2));
    }
    for (const auto& s : all_root_specs(2, 2)) CHECK(par.contains(root_matrix(s, 2).matrix()));
    // The image is the full preimage of the block-diagonal subgroup mod 2.
    CHECK(par.size() == 36 * 1024);
    for (Packed4 x : par.elements()) {
      const ModMatrix m = unpack4(x);
      bool diag = true;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if ((m(r, c) & 1u) && (r % 2) != (c % 2)) diag = false;
      REQUIRE(diag);
    }
  }

  TEST_CASE("closure cache round trip and rejection of bad files") {
    const ClosureTable t = quotient_closure();
    const std::string path = temp_path("twistcert_closure_test.bin");
    save_closure(t, path);
    const auto back = load_closure(path);
    REQUIRE(back.has_value());
    CHECK(back->elements() == t.elements());
    {
      std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
      f.seekp(0);
      f.put('X');
    }
    CHECK_FALSE(load_closure(path).has_value());
    save_closure(t, path);
    {
      std::ofstream f(path, std::ios::binary | std::ios::app);
      f.put('\0');
    }
    CHECK_FALSE(load_closure(path).has_value());
    CHECK(closure_cached(path).elements() == t.elements());
    CHECK(load_closure(path).has_value());
    std::remove(path.c_str());
    CHECK_FALSE(load_closure(path).has_value());
  }

  TEST_CASE("gamma_index") {
    const IndexResult r = gamma_index(shared_closure());
    CHECK(r.multiple_of_20);
    CHECK(r.within_bound);
    CHECK(r.index >= 20);
    CHECK(r.index == 20);
    CHECK(r.image_order == 36864);
  }

  TEST_CASE("membership examples") {
    CHECK(membership(gen(CurveKind::c, 1, 1, 2)).verdict == Membership::not_in_gamma);
    CHECK(membership(root_matrix({RootKind::V, 1, 0, 4}, 2)).verdict == Membership::in_gamma);
    CHECK(membership(gen(CurveKind::c, 1, 2, 3)).method == "generator_power");
    CHECK(membership(gen(CurveKind::c, 2, -4, 3)).verdict == Membership::in_gamma);
    CHECK(membership(gen(CurveKind::c, 2, 3, 3)).method == "mod2_block");
    CHECK(membership(gen(CurveKind::c, 1, 1, 3)).verdict == Membership::not_in_gamma);
    const auto x = membership(root_matrix({RootKind::X, 1, 3, 4}, 3));
    CHECK(x.verdict == Membership::in_gamma);
    CHECK(x.method == "root_synthesis");
    REQUIRE(x.witness.has_value());
    CHECK(eval_gen_word(*x.witness) == root_matrix({RootKind::X, 1, 3, 4}, 3));
    CHECK(membership(root_matrix({RootKind::Z, 1, 3, 16}, 3)).method == "congruence");
    CHECK(membership(root_matrix({RootKind::X, 1, 3, 2}, 3)).verdict == Membership::unknown);
  }

  TEST_CASE("membership of generator words") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
      const std::size_t g = 2 + static_cast<std::size_t>(t % 3);
      const GenWord w = random_gen_word(rng, g, 12);
      const SpMatrix m = eval_gen_word(w);
      const auto r = membership(m, nullptr, &w);
      CHECK(r.verdict == Membership::in_gamma);
    }
  }

  TEST_CASE("genus-2 membership agrees with the mod-2 obstruction") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> e(-3, 3);
    int out = 0;
    for (int t = 0; t < 200; ++t) {
      TwistWord w(2);
      for (int k = 0; k < 8; ++k) {
        const auto kd = static_cast<CurveKind>(kind(rng));
        w.append(Syllable{{kd, kd == CurveKind::c ? 1u : 1u + rng() % 2}, e(rng)});
      }
      const SpMatrix m = eval_word(w);
      const bool in = membership(m).verdict == Membership::in_gamma;
      CHECK(in == mod2_block_test(m));
      out += !in;
    }
    CHECK(out > 0);
  }
}
