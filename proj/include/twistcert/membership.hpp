#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twistcert/closure.hpp"
#include "twistcert/root_subgroups.hpp"

namespace twistcert {

enum class Membership : std::uint8_t { in_gamma, not_in_gamma, unknown };
const char* to_string(Membership m);

struct MembershipResult {
  Membership verdict = Membership::unknown;
  /// How the verdict was reached: "closure", "congruence", "mod2_block",
  /// "witness", "root_synthesis", "generator_power" or "none".
  std::string method;
  /// Word certificate for in_gamma when one was checked or produced.
  std::optional<GenWord> witness;
};

/// Membership in Gamma, the group generated by A_i^{+-1}, B_i^{+-1}, C_i^{+-2}.
///
/// Genus 2 is decided exactly from the closure table (computed on first use
/// when none is passed). For any genus, a matrix congruent to I modulo
/// 2^{2g-2} is in Gamma. For genus >= 3: failing mod2_block_test gives
/// not_in_gamma; a supplied witness that evaluates to m, a root element
/// the synthesizer can write, or an even power of some C_i gives in_gamma;
/// anything else is unknown.
MembershipResult membership(const SpMatrix& m, const ClosureTable* table = nullptr,
                            const GenWord* witness = nullptr);

/// Process-wide genus-2 table, computed once (or read from cache_path).
const ClosureTable& shared_closure(const std::string& cache_path = "");

}  // namespace twistcert
