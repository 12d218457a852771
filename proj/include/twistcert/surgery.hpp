#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "twistcert/twist_word.hpp"

namespace twistcert {

/// Which longitude the second coordinate of a TorusClass refers to.
enum class Longitude : std::uint8_t { stable, surface };

/// mu * (meridian) + lam * (longitude) on the boundary torus of a
/// blown-up orbit.
struct TorusClass {
  std::int64_t mu = 0;
  std::int64_t lam = 0;
  Longitude basis = Longitude::surface;

  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// Thrown when two classes in different longitude bases are combined.
class BasisMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// <(m1,l1),(m2,l2)> = m1 l2 - l1 m2, so <mu, lambda> = 1.
std::int64_t pairing(const TorusClass& x, const TorusClass& y);
/// Oriented intersection number, normalized so a section meets the meridian
/// once positively: Int(lambda, mu) = +1. Int(x, y) = -<x, y>.
std::int64_t intersection(const TorusClass& x, const TorusClass& y);

/// First nonzero coordinate made positive.
TorusClass sign_normalized(TorusClass c);

/// a, b -> 0; c -> +1. Throws std::invalid_argument for d-curves.
std::int64_t twist_of_orbit(const CurveLetter& curve);

struct EquivalenceRejection {
  std::int64_t twist;
  std::int64_t k;
};

/// Order l of the Dehn twist in the fiber equivalent to an index-k surgery,
/// or a rejection when no fibration-preserving equivalence is known.
std::variant<std::int64_t, EquivalenceRejection> dehn_fried_equivalent_twist_order(std::int64_t twist,
                                                                                   std::int64_t k);

/// lambda^s = -twist * mu + lambda_S, in the surface basis.
TorusClass stable_longitude_in_surface_basis(std::int64_t twist);

/// mu + k lambda^s rewritten in the surface basis, sign-normalized.
TorusClass new_meridian_class(std::int64_t twist, std::int64_t k);

/// The j with lambda_{S'} = lambda_S + j mu given the twist number
/// Int(lambda_{S'}, lambda_S), solved through the intersection form.
std::int64_t longitude_shift_for_twist(std::int64_t twist);

enum class Phase : std::uint8_t { zero, three_halves_pi };

/// A periodic orbit lying on a curve of fiber s (0-based block index).
struct OrbitSpec {
  CurveLetter curve;
  std::size_t block;
  Phase phase;
  std::int64_t twist;

  friend bool operator==(const OrbitSpec&, const OrbitSpec&) = default;
};

class SurgeryOp {
 public:
  /// Fills the twist order from the equivalence table.
  static std::variant<SurgeryOp, EquivalenceRejection> make(const OrbitSpec& orbit, std::int64_t k);

  const OrbitSpec& orbit() const noexcept { return orbit_; }
  std::int64_t index_k() const noexcept { return k_; }
  std::int64_t order_l() const noexcept { return l_; }

  friend bool operator==(const SurgeryOp&, const SurgeryOp&) = default;

 private:
  SurgeryOp(const OrbitSpec& o, std::int64_t k, std::int64_t l) : orbit_(o), k_(k), l_(l) {}

  OrbitSpec orbit_;
  std::int64_t k_;
  std::int64_t l_;
};

/// Base manifold: mapping torus of tau_hat_d^blocks. Ops grouped by block
/// and ordered as they are composed within the block.
struct SurgeryPlan {
  std::size_t genus = 2;
  std::vector<std::vector<SurgeryOp>> blocks;
};

/// True when orbits sharing a fiber (block and phase) lie on disjoint curves.
bool same_fiber_orbits_disjoint(const SurgeryPlan& plan);

std::variant<SurgeryPlan, EquivalenceRejection> plan_from_T_word(const TDecomposition& dec, std::size_t genus);

/// Per block: tau_hat_d followed by the twists tau^l of that block, b's, then
/// c's, then a's.
TwistWord monodromy_from_plan(const SurgeryPlan& plan);

}  // namespace twistcert
