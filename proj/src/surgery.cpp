#include "twistcert/surgery.hpp"

#include <algorithm>
#include <optional>

namespace twistcert {

namespace {

void require_same_basis(const TorusClass& x, const TorusClass& y) {
  if (x.basis != y.basis) throw BasisMismatchError("torus classes use different longitudes");
}

}  // namespace

std::int64_t pairing(const TorusClass& x, const TorusClass& y) {
  require_same_basis(x, y);
  return x.mu * y.lam - x.lam * y.mu;
}

std::int64_t intersection(const TorusClass& x, const TorusClass& y) { return -pairing(x, y); }

TorusClass sign_normalized(TorusClass c) {
  if (c.mu < 0 || (c.mu == 0 && c.lam < 0)) {
    c.mu = -c.mu;
    c.lam = -c.lam;
  }
  return c;
}

std::int64_t twist_of_orbit(const CurveLetter& curve) {
  switch (curve.kind) {
    case CurveKind::a:
    case CurveKind::b: return 0;
    case CurveKind::c: return 1;
    case CurveKind::d: break;
  }
  throw std::invalid_argument("no surgery is performed on d-orbits");
}

std::variant<std::int64_t, EquivalenceRejection> dehn_fried_equivalent_twist_order(std::int64_t twist,
                                                                                   std::int64_t k) {
  if (twist == 0) return k;
  if ((twist == 1 && k == 2) || (twist == -1 && k == -2) || (twist == 2 && k == 1) || (twist == -2 && k == -1))
    return -k;
  return EquivalenceRejection{twist, k};
}

TorusClass stable_longitude_in_surface_basis(std::int64_t twist) { return {-twist, 1, Longitude::surface}; }

TorusClass new_meridian_class(std::int64_t twist, std::int64_t k) {
  const TorusClass ls = stable_longitude_in_surface_basis(twist);
  return sign_normalized({1 + k * ls.mu, k * ls.lam, Longitude::surface});
}

std::int64_t longitude_shift_for_twist(std::int64_t twist) {
  // Int(lambda_S + j mu, lambda_S) = j Int(mu, lambda_S); solve for j.
  const TorusClass mu{1, 0, Longitude::surface};
  const TorusClass lambda{0, 1, Longitude::surface};
  const std::int64_t unit = intersection(mu, lambda);
  return twist / unit;
}

std::variant<SurgeryOp, EquivalenceRejection> SurgeryOp::make(const OrbitSpec& orbit, std::int64_t k) {
  const auto l = dehn_fried_equivalent_twist_order(orbit.twist, k);
  if (const auto* r = std::get_if<EquivalenceRejection>(&l)) return *r;
  return SurgeryOp(orbit, k, std::get<std::int64_t>(l));
}

bool same_fiber_orbits_disjoint(const SurgeryPlan& plan) {
  for (const auto& ops : plan.blocks)
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        const auto& x = ops[i].orbit();
        const auto& y = ops[j].orbit();
        if (x.block == y.block && x.phase == y.phase && (x.curve == y.curve || !curves_disjoint(x.curve, y.curve)))
          return false;
      }
  return true;
}

std::variant<SurgeryPlan, EquivalenceRejection> plan_from_T_word(const TDecomposition& dec, std::size_t genus) {
  SurgeryPlan plan;
  plan.genus = genus;
  for (std::size_t s = 0; s < dec.blocks.size(); ++s) {
    const TBlock& b = dec.blocks[s];
    std::vector<SurgeryOp> ops;
    auto add = [&](CurveKind kind, std::size_t index, Phase phase, std::int64_t k) -> std::optional<EquivalenceRejection> {
      const CurveLetter c{kind, index};
      auto op = SurgeryOp::make(OrbitSpec{c, s, phase, twist_of_orbit(c)}, k);
      if (auto* r = std::get_if<EquivalenceRejection>(&op)) return *r;
      ops.push_back(std::get<SurgeryOp>(op));
      return std::nullopt;
    };
    for (std::size_t j = 0; j < b.q.size(); ++j)
      if (b.q[j] != 0)
        if (auto r = add(CurveKind::b, j + 1, Phase::three_halves_pi, b.q[j])) return *r;
    for (std::size_t m = 0; m < b.r.size(); ++m)
      if (b.r[m] == -2)
        if (auto r = add(CurveKind::c, m + 1, Phase::zero, 2)) return *r;
    for (std::size_t i = 0; i < b.p.size(); ++i)
      if (b.p[i] != 0)
        if (auto r = add(CurveKind::a, i + 1, Phase::zero, b.p[i])) return *r;
    plan.blocks.push_back(std::move(ops));
  }
  return plan;
}

TwistWord monodromy_from_plan(const SurgeryPlan& plan) {
  TwistWord w(plan.genus);
  auto rank = [](CurveKind k) {
    switch (k) {
      case CurveKind::b: return 0;
      case CurveKind::c: return 1;
      default: return 2;
    }
  };
  for (const auto& ops : plan.blocks) {
    w.append(tau_hat_d(plan.genus));
    std::vector<SurgeryOp> sorted(ops);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const SurgeryOp& x, const SurgeryOp& y) {
      const auto& cx = x.orbit().curve;
      const auto& cy = y.orbit().curve;
      if (rank(cx.kind) != rank(cy.kind)) return rank(cx.kind) < rank(cy.kind);
      return cx.index < cy.index;
    });
    for (const auto& op : sorted) w.append(Syllable{op.orbit().curve, op.order_l()});
  }
  return w;
}

}  // namespace twistcert
