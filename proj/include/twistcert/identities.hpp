#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace twistcert {

struct IdentityCheck {
  std::string family;    // e.g. "x_ladder", "chain_relation"
  std::string instance;  // e.g. "j=1 l=2"
  bool passed = false;
  /// Empty on success; on failure the matrix lhs - rhs. For the chain
  /// relation, which order and c-orientation holds.
  std::string detail;
};

struct IdentityReport {
  std::size_t genus = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
  /// Checks belonging to one family.
  std::vector<IdentityCheck> family(const std::string& name) const;
};

/// Runs every root-subgroup identity used to build generator words, the
/// rotation and J identities and the chain relation, for one genus >= 2.
///
/// The chain relation
///   A_{i+1}^2 (A_i^-1 B_i^-1 C_i^-2)^2 A_i^-1 B_i^-1 = C_i^2
/// is evaluated as a literal left-to-right product and in reverse, first with
/// C_i as defined and then with C_i replaced by its inverse (the opposite
/// twist orientation). The check passes if any of the four holds; the detail
/// names the combinations that hold.
IdentityReport verify_identities(std::size_t genus);

}  // namespace twistcert
