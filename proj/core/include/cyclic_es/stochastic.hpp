#pragma once

#include <cstdint>
#include <vector>

#include "cyclic_es/bigcount.hpp"
#include "cyclic_es/permutation.hpp"
#include "cyclic_es/tableau.hpp"

namespace cyclic_es {

// splitmix64 mixing step; used to derive independent per-sample seeds so
// estimates are reproducible regardless of batching.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_sample_seed(std::uint64_t seed, std::uint64_t index);

// Uniform cyclic permutation of length n: the canonical form fixes 1 at the
// front and the tail is a Fisher-Yates shuffle driven by mt19937_64 with
// rejection-sampled bounded draws. Bit-reproducible across platforms.
CyclicPermutation sample_cyclic(int n, std::uint64_t seed);

struct MuEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;       // average cyclic LIS length
  double std_error = 0.0;  // sample stddev / sqrt(samples); 0 for 1 sample
  double ratio = 0.0;      // mean / (2*sqrt(n))
};

// Monte-Carlo estimate of mu(n) = E[cyclic LIS of a uniform cycle], using
// sample seeds derive_sample_seed(seed, 0..samples-1). Deterministic for a
// fixed (n, samples, seed) triple.
MuEstimate estimate_mu(int n, std::uint64_t samples, std::uint64_t seed);

// Exact mu(n) as a rational, by full enumeration of all (n-1)! cycles.
// Throws BudgetExceeded when (n-1)! > budget.
Rational exact_mu(int n, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cyclic_es
