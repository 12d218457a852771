#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "twistcert/certify.hpp"

namespace twistcert {

struct DensityParams {
  std::size_t genus = 2;
  std::size_t blocks = 2;
  std::size_t samples = 100;
  std::int64_t exponent_bound = 2;
  std::uint64_t seed = 0;
};

struct DensityResult {
  std::size_t samples = 0;
  std::size_t certified = 0;
  /// Samples whose blocks all have zero a-, b- and c-exponents (powers of
  /// tau_hat_d only).
  std::size_t all_zero = 0;
  /// Number of inconclusive samples carrying each reason, indexed by PAReason.
  std::array<std::size_t, 5> reason_counts{};

  double fraction() const noexcept { return samples ? static_cast<double>(certified) / samples : 0.0; }
  friend bool operator==(const DensityResult&, const DensityResult&) = default;
};

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of sample i, independent of evaluation order.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// The random family word of sample i: each block draws p and q uniformly
/// from [-bound, bound]^g and r uniformly from {0, -2}^{g-1}.
TDecomposition sample_decomposition(const DensityParams& params, std::uint64_t index);

/// Throws std::invalid_argument when samples or blocks is zero or the bound
/// is negative.
DensityResult density_experiment_serial(const DensityParams& params);
/// OpenMP version; identical results to the serial one for every schedule.
DensityResult density_experiment(const DensityParams& params);

}  // namespace twistcert
