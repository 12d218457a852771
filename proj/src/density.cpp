#include "twistcert/density.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace twistcert {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

namespace {

void check(const DensityParams& p) {
  if (p.samples == 0) throw std::invalid_argument("density: samples must be at least 1");
  if (p.blocks == 0) throw std::invalid_argument("density: blocks must be at least 1");
  if (p.exponent_bound < 0) throw std::invalid_argument("density: exponent bound must be non-negative");
  if (p.genus < 2) throw std::invalid_argument("density: genus must be at least 2");
}

// Uniform in [lo, hi] from raw 64-bit output by rejection, so the stream is
// fixed independent of the standard library's distribution implementation.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

struct SampleOutcome {
  bool certified = false;
  bool all_zero = false;
  std::vector<PAReason> reasons;
};

SampleOutcome run_sample(const DensityParams& p, std::uint64_t i) {
  const TDecomposition d = sample_decomposition(p, i);
  SampleOutcome out;
  out.all_zero = true;
  for (const auto& b : d.blocks)
    for (const auto* v : {&b.p, &b.q, &b.r})
      for (auto e : *v) out.all_zero = out.all_zero && e == 0;
  const PAVerdict v = certify_pa(eval_word(reassemble(d, p.genus)));
  out.certified = v.certified();
  out.reasons = v.reasons;
  return out;
}

DensityResult tally(const std::vector<SampleOutcome>& outcomes) {
  DensityResult r;
  r.samples = outcomes.size();
  for (const auto& o : outcomes) {
    r.certified += o.certified;
    r.all_zero += o.all_zero;
    for (auto reason : o.reasons) ++r.reason_counts[static_cast<std::size_t>(reason)];
  }
  return r;
}

}  // namespace

TDecomposition sample_decomposition(const DensityParams& params, std::uint64_t index) {
  std::mt19937_64 rng(sample_seed(params.seed, index));
  const std::size_t g = params.genus;
  const std::int64_t b = params.exponent_bound;
  TDecomposition d;
  for (std::size_t s = 0; s < params.blocks; ++s) {
    TBlock block{std::vector<std::int64_t>(g), std::vector<std::int64_t>(g), std::vector<std::int64_t>(g - 1)};
    for (auto& x : block.p) x = uniform(rng, -b, b);
    for (auto& x : block.q) x = uniform(rng, -b, b);
    for (auto& x : block.r) x = uniform(rng, 0, 1) ? -2 : 0;
    d.blocks.push_back(std::move(block));
  }
  return d;
}

DensityResult density_experiment_serial(const DensityParams& params) {
  check(params);
  std::vector<SampleOutcome> outcomes;
  outcomes.reserve(params.samples);
  for (std::size_t i = 0; i < params.samples; ++i) outcomes.push_back(run_sample(params, i));
  return tally(outcomes);
}

DensityResult density_experiment(const DensityParams& params) {
  check(params);
  std::vector<SampleOutcome> outcomes(params.samples);
  const auto n = static_cast<std::int64_t>(params.samples);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i)
    outcomes[static_cast<std::size_t>(i)] = run_sample(params, static_cast<std::uint64_t>(i));
  return tally(outcomes);
}

}  // namespace twistcert
