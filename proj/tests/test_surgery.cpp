#include <doctest.h>

#include <random>

#include "twistcert/surgery.hpp"

using namespace twistcert;

namespace {

std::int64_t order_or_zero(std::int64_t twist, std::int64_t k, bool& rejected) {
  const auto v = dehn_fried_equivalent_twist_order(twist, k);
  rejected = std::holds_alternative<EquivalenceRejection>(v);
  return rejected ? 0 : std::get<std::int64_t>(v);
}

TDecomposition decompose(const char* text, std::size_t g) {
  return std::get<TDecomposition>(validate_family_T(parse_word(text, g)));
}

SurgeryPlan plan_of(const TDecomposition& d, std::size_t g) { return std::get<SurgeryPlan>(plan_from_T_word(d, g)); }

}  // namespace

TEST_SUITE("surgery_calc") {
  TEST_CASE("twist_of_orbit") {
    CHECK(twist_of_orbit({CurveKind::a, 3}) == 0);
    CHECK(twist_of_orbit({CurveKind::b, 1}) == 0);
    CHECK(twist_of_orbit({CurveKind::c, 2}) == 1);
    CHECK_THROWS_AS(twist_of_orbit({CurveKind::d, 1}), std::invalid_argument);
  }

  TEST_CASE("equivalence table") {
    bool rej = false;
    CHECK(order_or_zero(0, 5, rej) == 5);
    CHECK_FALSE(rej);
    CHECK(order_or_zero(1, 2, rej) == -2);
    CHECK_FALSE(rej);
    order_or_zero(1, 3, rej);
    CHECK(rej);
    const auto r = dehn_fried_equivalent_twist_order(3, 1);
    REQUIRE(std::holds_alternative<EquivalenceRejection>(r));
    CHECK(std::get<EquivalenceRejection>(r).twist == 3);
    CHECK(std::get<EquivalenceRejection>(r).k == 1);
    order_or_zero(1, 0, rej);
    CHECK(rej);
  }

  TEST_CASE("table rows agree with the new meridian") {
    for (std::int64_t k = -20; k <= 20; ++k) {
      bool rej = true;
      CHECK(order_or_zero(0, k, rej) == k);
      CHECK(new_meridian_class(0, k) == sign_normalized({1, k, Longitude::surface}));
    }
    const std::int64_t rows[4][2] = {{1, 2}, {-1, -2}, {2, 1}, {-2, -1}};
    for (const auto& row : rows) {
      bool rej = true;
      CHECK(order_or_zero(row[0], row[1], rej) == -row[1]);
      CHECK(new_meridian_class(row[0], row[1]) == TorusClass{1, -row[1], Longitude::surface});
    }
    // Every other nonzero twist with |twist| <= 4 is rejected for all k.
    for (std::int64_t t = -4; t <= 4; ++t)
      for (std::int64_t k = -6; k <= 6; ++k) {
        if (t == 0) continue;
        bool listed = false;
        for (const auto& row : rows) listed = listed || (row[0] == t && row[1] == k);
        bool rej = false;
        order_or_zero(t, k, rej);
        CHECK(rej == !listed);
      }
  }

  TEST_CASE("stable longitude and new meridian examples") {
    CHECK(stable_longitude_in_surface_basis(0) == TorusClass{0, 1, Longitude::surface});
    CHECK(stable_longitude_in_surface_basis(1) == TorusClass{-1, 1, Longitude::surface});
    CHECK(stable_longitude_in_surface_basis(-2) == TorusClass{2, 1, Longitude::surface});
    CHECK(new_meridian_class(0, 7) == TorusClass{1, 7, Longitude::surface});
    CHECK(new_meridian_class(1, 2) == TorusClass{1, -2, Longitude::surface});
    CHECK(new_meridian_class(2, 1) == TorusClass{1, -1, Longitude::surface});
  }

  TEST_CASE("intersection form and the longitude shift") {
    const TorusClass mu{1, 0, Longitude::surface};
    const TorusClass lambda{0, 1, Longitude::surface};
    CHECK(pairing(mu, lambda) == 1);
    CHECK(pairing(lambda, mu) == -1);
    CHECK(intersection(lambda, mu) == 1);
    for (std::int64_t t = -5; t <= 5; ++t) {
      const std::int64_t j = longitude_shift_for_twist(t);
      CHECK(j == -t);
      const TorusClass shifted{j, 1, Longitude::surface};
      CHECK(intersection(shifted, lambda) == t);
      // The new meridian meets itself trivially and meets mu through k.
      const TorusClass m = new_meridian_class(t, 3);
      CHECK(pairing(m, m) == 0);
    }
    CHECK_THROWS_AS(pairing(mu, TorusClass{0, 1, Longitude::stable}), BasisMismatchError);
  }

  TEST_CASE("plan examples") {
    const auto d = decompose("d1^-2 c1^-2 a1 d1^-2 b2 b1", 2);
    const SurgeryPlan p = plan_of(d, 2);
    REQUIRE(p.blocks.size() == 2);
    REQUIRE(p.blocks[0].size() == 2);
    const auto& c_op = p.blocks[0][0];
    const auto& a_op = p.blocks[0][1];
    CHECK(a_op.orbit().curve == CurveLetter{CurveKind::a, 1});
    CHECK(a_op.index_k() == 1);
    CHECK(a_op.order_l() == 1);
    CHECK(c_op.orbit().curve == CurveLetter{CurveKind::c, 1});
    CHECK(c_op.index_k() == 2);
    CHECK(c_op.order_l() == -2);
    CHECK(c_op.orbit().twist == 1);
    REQUIRE(p.blocks[1].size() == 2);
    for (const auto& op : p.blocks[1]) {
      CHECK(op.orbit().phase == Phase::three_halves_pi);
      CHECK(op.orbit().block == 1);
    }
    CHECK(same_fiber_orbits_disjoint(p));

    const SurgeryPlan empty = plan_of(decompose("d1^-2 d2^-2", 3), 3);
    REQUIRE(empty.blocks.size() == 1);
    CHECK(empty.blocks[0].empty());

    const SurgeryPlan bq = plan_of(decompose("d1^-2 d2^-2 b3^-3", 3), 3);
    REQUIRE(bq.blocks[0].size() == 1);
    CHECK(bq.blocks[0][0].orbit().curve == CurveLetter{CurveKind::b, 3});
    CHECK(bq.blocks[0][0].index_k() == -3);
    CHECK(bq.blocks[0][0].order_l() == -3);
  }

  TEST_CASE("monodromy examples") {
    const TwistWord w = parse_word("d1^-2 c1^-2 a1 d1^-2 b2 b1", 2);
    const TwistWord m = monodromy_from_plan(plan_of(std::get<TDecomposition>(validate_family_T(w)), 2));
    CHECK(eval_word(m).matrix() == eval_word(w).matrix());

    SurgeryPlan empty;
    empty.genus = 3;
    empty.blocks.resize(1);
    CHECK(monodromy_from_plan(empty) == tau_hat_d(3));

    SurgeryPlan single;
    single.genus = 2;
    single.blocks.push_back({std::get<SurgeryOp>(SurgeryOp::make({{CurveKind::a, 1}, 0, Phase::zero, 0}, 1))});
    const TwistWord sw = monodromy_from_plan(single);
    CHECK(format_word(sw) == "d1^-2 a1");
    CHECK(eval_word(sw).matrix() == generator_matrix({CurveKind::a, 1}, 2).matrix());
  }

  TEST_CASE("round trip through the planner on random family words") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t g = 2; g <= 5; ++g)
      for (int t = 0; t < 30; ++t) {
        TDecomposition d;
        for (int k = 0; k < 1 + t % 3; ++k) {
          TBlock b{std::vector<std::int64_t>(g), std::vector<std::int64_t>(g), std::vector<std::int64_t>(g - 1)};
          for (auto& x : b.p) x = e(rng);
          for (auto& x : b.q) x = e(rng);
          for (auto& x : b.r) x = coin(rng) ? -2 : 0;
          d.blocks.push_back(b);
        }
        const TwistWord w = reassemble(d, g);
        const auto planned = plan_from_T_word(d, g);
        REQUIRE(std::holds_alternative<SurgeryPlan>(planned));
        const SurgeryPlan& plan = std::get<SurgeryPlan>(planned);
        CHECK(same_fiber_orbits_disjoint(plan));
        const TwistWord m = monodromy_from_plan(plan);
        const auto back = validate_family_T(m);
        REQUIRE(std::holds_alternative<TDecomposition>(back));
        CHECK(std::get<TDecomposition>(back) == d);
        CHECK(eval_word(m).matrix() == eval_word(w).matrix());
      }
  }

  TEST_CASE("same-fiber intersecting orbits are flagged") {
    SurgeryPlan p;
    p.genus = 2;
    const auto op1 = std::get<SurgeryOp>(SurgeryOp::make({{CurveKind::a, 1}, 0, Phase::zero, 0}, 1));
    const auto op2 = std::get<SurgeryOp>(SurgeryOp::make({{CurveKind::b, 1}, 0, Phase::zero, 0}, 1));
    p.blocks.push_back({op1, op2});
    CHECK_FALSE(same_fiber_orbits_disjoint(p));
  }
}
