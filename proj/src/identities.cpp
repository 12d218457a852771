#include "twistcert/identities.hpp"

#include <algorithm>
#include <span>

#include "twistcert/root_subgroups.hpp"
#include "twistcert/twist_word.hpp"

namespace twistcert {

bool IdentityReport::all_passed() const { return failures() == 0 && !checks.empty(); }

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<IdentityCheck> IdentityReport::family(const std::string& name) const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks)
    if (c.family == name) out.push_back(c);
  return out;
}

namespace {

struct Ctx {
  std::size_t g;
  IdentityReport& report;

  IntMatrix A(std::size_t i, std::int64_t e = 1) const { return letter_power({CurveKind::a, i}, e, g); }
  IntMatrix B(std::size_t i, std::int64_t e = 1) const { return letter_power({CurveKind::b, i}, e, g); }
  IntMatrix C(std::size_t i, std::int64_t e = 1) const { return letter_power({CurveKind::c, i}, e, g); }
  IntMatrix root(RootKind k, std::size_t j, std::size_t kk, std::int64_t t) const {
    return root_matrix({k, j, kk, t}, g).matrix();
  }
  IntMatrix inv(const IntMatrix& m) const { return sp_inverse(SpMatrix(m, g)).matrix(); }
  IntMatrix comm(const IntMatrix& a, const IntMatrix& b) const { return a * b * inv(a) * inv(b); }
  IntMatrix rot(std::size_t i) const { return A(i) * B(i) * A(i); }

  void expect(const std::string& family, const std::string& instance, const IntMatrix& lhs, const IntMatrix& rhs) {
    IdentityCheck c{family, instance, lhs == rhs, {}};
    if (!c.passed) c.detail = "lhs - rhs = " + to_string(lhs - rhs);
    report.checks.push_back(std::move(c));
  }
};

std::string kv(const char* a, std::size_t x) { return std::string(a) + "=" + std::to_string(x); }
std::string kv(const char* a, std::size_t x, const char* b, std::size_t y) { return kv(a, x) + " " + kv(b, y); }

IntMatrix ordered_product(const std::vector<IntMatrix>& fs, bool reversed, std::size_t dim) {
  if (!reversed) return product(fs, dim);
  std::vector<IntMatrix> r(fs.rbegin(), fs.rend());
  return product(r, dim);
}

}  // namespace

IdentityReport verify_identities(std::size_t g) {
  IdentityReport report;
  report.genus = g;
  Ctx x{g, report};
  const std::size_t n = 2 * g;
  using K = RootKind;

  for (std::size_t i = 1; i <= g; ++i) {
    x.expect("vw_generators", kv("i", i) + " V", x.root(K::V, i, 0, 1), x.A(i));
    x.expect("vw_generators", kv("i", i) + " W", x.root(K::W, i, 0, 1), x.B(i, -1));
  }
  for (std::size_t i = 1; i < g; ++i) x.expect("x_adjacent", kv("i", i), d_matrix(i, g).matrix(), x.root(K::X, i, i + 1, 2));
  for (std::size_t i = 2; i <= g; ++i)
    x.expect("x_adjacent_down", kv("i", i), d_prime_matrix(i, g).matrix(), x.root(K::X, i, i - 1, -2));

  for (std::size_t j = 1; j < g; ++j)
    for (std::size_t l = 1; j + l <= g - 1; ++l) {
      const std::int64_t p = std::int64_t{1} << l;
      x.expect("x_ladder", kv("j", j, "l", l), x.comm(x.root(K::X, j, j + l, p), x.root(K::X, j + l, j + l + 1, 2)),
               x.root(K::X, j, j + l + 1, 2 * p));
    }
  for (std::size_t j = 1; j <= g; ++j)
    for (std::size_t l = 1; l + 2 <= j; ++l) {
      const std::int64_t p = std::int64_t{1} << l;
      x.expect("x_ladder_down", kv("j", j, "l", l),
               x.comm(x.root(K::X, j, j - l, p), x.root(K::X, j - l, j - l - 1, 2)),
               x.root(K::X, j, j - l - 1, 2 * p));
    }

  for (std::size_t k = 2; k <= g; ++k) {
    const IntMatrix d_inv = x.inv(d_matrix(k - 1, g).matrix());
    x.expect("z_adjacent", kv("k", k), x.comm(x.root(K::V, k, 0, 1), d_inv) * x.root(K::V, k - 1, 0, 4),
             x.root(K::Z, k - 1, k, 2));
  }
  // Instances with k - l >= 1; at l = 1 the inner Z_{k,k} is undefined.
  for (std::size_t k = 3; k <= g; ++k)
    for (std::size_t l = 2; l < k; ++l) {
      const std::int64_t p = std::int64_t{1} << l;
      const IntMatrix d_inv = x.inv(d_matrix(k - l, g).matrix());
      x.expect("z_ladder", kv("k", k, "l", l), x.comm(x.root(K::Z, k - l + 1, k, p / 2), d_inv),
               x.root(K::Z, k - l, k, p));
    }

  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t i = 1; i <= g; ++i) p = p * x.rot(i);
  const IntMatrix p_inv = x.inv(p);
  for (std::size_t j = 1; j <= g; ++j)
    for (std::size_t k = j + 1; k <= g; ++k)
      x.expect("y_conjugate", kv("j", j, "k", k), p * x.root(K::Z, j, k, -1) * p_inv, x.root(K::Y, j, k, 1));

  for (std::size_t i = 1; i <= g; ++i) {
    // e_i -> -e_{g+i}, e_{g+i} -> e_i: columns are images.
    IntMatrix r = IntMatrix::identity(n);
    r(i - 1, i - 1) = 0;
    r(g + i - 1, g + i - 1) = 0;
    r(g + i - 1, i - 1) = -1;
    r(i - 1, g + i - 1) = 1;
    x.expect("rotation", kv("i", i), x.rot(i), r);
  }
  x.expect("product_is_J", "", p, symplectic_form(g));

  for (std::size_t i = 1; i < g; ++i) {
    std::string holds;
    for (int orient : {1, -1}) {
      const IntMatrix c2 = x.C(i, 2 * orient);
      const IntMatrix c2_inv = x.C(i, -2 * orient);
      const std::vector<IntMatrix> lhs{x.A(i + 1, 2), x.A(i, -1), x.B(i, -1), c2_inv, x.A(i, -1),
                                       x.B(i, -1),    c2_inv,     x.A(i, -1), x.B(i, -1)};
      for (bool reversed : {false, true})
        if (ordered_product(lhs, reversed, n) == c2) {
          if (!holds.empty()) holds += ", ";
          holds += std::string(reversed ? "reverse" : "forward") + (orient == 1 ? " order" : " order with C inverted");
        }
    }
    report.checks.push_back({"chain_relation", kv("i", i), !holds.empty(),
                             holds.empty() ? "fails in both orders with either C orientation" : "holds: " + holds});
  }
  return report;
}

}  // namespace twistcert
