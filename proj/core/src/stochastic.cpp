#include "cyclic_es/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cyclic_es/monotone.hpp"

namespace cyclic_es {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

namespace {

// Unbiased uniform draw from [0, bound) by rejection; mt19937_64 output is
// specified by the standard, so results are identical everywhere.
std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

CyclicPermutation sample_cyclic(int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  }
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i + 1;
  std::mt19937_64 gen(seed);
  // Fisher-Yates over positions 1..n-1; position 0 keeps the value 1, which
  // pins the canonical form while staying uniform over all (n-1)! cycles.
  for (int i = n - 1; i >= 2; --i) {
    const std::uint64_t j =
        1 + bounded_draw(gen, static_cast<std::uint64_t>(i));
    std::swap(values[static_cast<size_t>(i)], values[j]);
  }
  return CyclicPermutation::from_values(std::move(values));
}

MuEstimate estimate_mu(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) {
    throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  }
  if (samples < 1) {
    throw Error(errc::invalid_bound, "InvalidBound: samples must be >= 1");
  }
  // Integer accumulation keeps the estimate bit-identical no matter how the
  // samples would be batched.
  unsigned long long sum = 0;
  unsigned long long sum_sq = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const CyclicPermutation c = sample_cyclic(n, derive_sample_seed(seed, s));
    const unsigned long long len =
        static_cast<unsigned long long>(cyclic_lis_length(c));
    sum += len;
    sum_sq += len * len;
  }
  MuEstimate est;
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples > 1) {
    const unsigned __int128 numerator =
        static_cast<unsigned __int128>(samples) * sum_sq -
        static_cast<unsigned __int128>(sum) * sum;
    const long double variance =
        static_cast<long double>(numerator) /
        (static_cast<long double>(samples) *
         static_cast<long double>(samples - 1));
    est.std_error = static_cast<double>(
        std::sqrt(variance / static_cast<long double>(samples)));
  }
  est.ratio = est.mean / (2.0 * std::sqrt(static_cast<double>(n)));
  return est;
}

Rational exact_mu(int n, std::uint64_t budget) {
  if (n < 1) {
    throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  }
  if (factorial_big(n - 1) > BigCount(budget)) {
    std::ostringstream msg;
    msg << "BudgetExceeded: exact mu(" << n << ") needs " << (n - 1)
        << "! cycles, more than the cap of " << budget;
    throw Error(errc::budget_exceeded, msg.str());
  }
  std::vector<int> tail(static_cast<size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) tail[static_cast<size_t>(i)] = i + 2;
  BigCount total = 0;
  BigCount count = 0;
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  do {
    values.clear();
    values.push_back(1);
    values.insert(values.end(), tail.begin(), tail.end());
    total += cyclic_lis_length(CyclicPermutation::from_values(values));
    ++count;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return Rational(total, count);
}

}  // namespace cyclic_es
