#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

using cyclic_es::BigCount;
using cyclic_es::CyclicPermutation;
using cyclic_es::Direction;
using cyclic_es::Rational;
using cyclic_es::SubPermutationWitness;
using cyclic_es::YoungTableau;

namespace {

bool follows(int prev, int next, Direction dir) {
  return dir == Direction::increasing ? prev < next : prev > next;
}

bool subset_monotone(std::span<const int> values, unsigned mask,
                     Direction dir) {
  int prev = 0;
  bool have_prev = false;
  for (size_t t = 0; t < values.size(); ++t) {
    if ((mask >> t & 1u) == 0) continue;
    if (have_prev && !follows(prev, values[t], dir)) return false;
    prev = values[t];
    have_prev = true;
  }
  return true;
}

}  // namespace

int longest_monotone_bruteforce(std::span<const int> values, Direction dir) {
  const size_t n = values.size();
  if (n > 20) throw std::invalid_argument("brute force capped at n=20");
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!subset_monotone(values, mask, dir)) continue;
    best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

std::vector<int> ending_lengths_dp(std::span<const int> values,
                                   Direction dir) {
  std::vector<int> lengths(values.size(), 1);
  for (size_t t = 0; t < values.size(); ++t) {
    for (size_t s = 0; s < t; ++s) {
      if (follows(values[s], values[t], dir)) {
        lengths[t] = std::max(lengths[t], lengths[s] + 1);
      }
    }
  }
  return lengths;
}

int lis_dp(std::span<const int> values) {
  const auto lengths = ending_lengths_dp(values, Direction::increasing);
  return lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
}

int lds_dp(std::span<const int> values) {
  const auto lengths = ending_lengths_dp(values, Direction::decreasing);
  return lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
}

int cyclic_longest_monotone_bruteforce(const CyclicPermutation& c,
                                       Direction dir) {
  const std::vector<int>& values = c.canonical().values();
  const size_t n = values.size();
  if (n > 16) throw std::invalid_argument("cyclic brute force capped at n=16");
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> sel;
    for (size_t t = 0; t < n; ++t) {
      if (mask >> t & 1u) sel.push_back(t);
    }
    const size_t m = sel.size();
    if (static_cast<int>(m) <= best) continue;
    // Monotone in cyclic order iff some rotation of the selected positions
    // lists the values monotonically.
    for (size_t start = 0; start < m; ++start) {
      bool ok = true;
      for (size_t step = 0; step + 1 < m && ok; ++step) {
        const int prev = values[sel[(start + step) % m]];
        const int next = values[sel[(start + step + 1) % m]];
        ok = follows(prev, next, dir);
      }
      if (ok) {
        best = static_cast<int>(m);
        break;
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> all_max_monotone_subsequences(
    std::span<const int> values, Direction dir) {
  const size_t n = values.size();
  if (n > 20) throw std::invalid_argument("brute force capped at n=20");
  int best = 0;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!subset_monotone(values, mask, dir)) continue;
    const int size = __builtin_popcount(mask);
    if (size < best) continue;
    if (size > best) {
      best = size;
      out.clear();
    }
    std::vector<int> positions;
    for (size_t t = 0; t < n; ++t) {
      if (mask >> t & 1u) positions.push_back(static_cast<int>(t) + 1);
    }
    out.push_back(std::move(positions));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubPermutationWitness expected_cyclic_witness(const CyclicPermutation& c,
                                              Direction dir) {
  const int n = c.size();
  const int target = cyclic_longest_monotone_bruteforce(c, dir);
  for (int start = 1; start <= n; ++start) {
    const cyclic_es::Permutation rotation = c.canonical().rotated(start);
    auto lists = all_max_monotone_subsequences(rotation.values(), dir);
    if (lists.empty() ||
        static_cast<int>(lists.front().size()) != target) {
      continue;
    }
    const std::vector<int>& positions = lists.front();  // lex smallest
    SubPermutationWitness w;
    w.direction = dir;
    for (int pos : positions) {
      w.positions.push_back((start - 1 + pos - 1) % n + 1);
      w.values.push_back(rotation.value_at(pos));
    }
    return w;
  }
  throw std::logic_error("no rotation attains the brute-force maximum");
}

std::vector<std::vector<int>> brute_force_extremal_linear(int k, int l) {
  const int n = k * l;
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<std::vector<int>> members;
  do {
    if (lis_dp(values) <= k && lds_dp(values) <= l) {
      members.push_back(values);
    }
  } while (std::next_permutation(values.begin(), values.end()));
  std::sort(members.begin(), members.end());
  return members;
}

std::map<std::pair<int, int>, BigCount> brute_force_extremal_counts(
    int max_total) {
  std::map<std::pair<int, int>, BigCount> counts;
  for (int n = 1; n <= max_total; ++n) {
    std::vector<std::pair<int, int>> shapes;
    for (int k = 1; k <= n; ++k) {
      if (n % k == 0) shapes.emplace_back(k, n / k);
    }
    for (const auto& shape : shapes) counts[shape] = 0;
    std::vector<int> values(static_cast<size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
      const int lis = lis_dp(values);
      const int lds = lds_dp(values);
      for (const auto& [k, l] : shapes) {
        if (lis <= k && lds <= l) ++counts[{k, l}];
      }
    } while (std::next_permutation(values.begin(), values.end()));
  }
  return counts;
}

std::vector<YoungTableau> brute_force_syt(int rows, int cols) {
  const int n = rows * cols;
  if (n > 10) throw std::invalid_argument("SYT brute force capped at 10 cells");
  std::vector<int> flat(static_cast<size_t>(n));
  std::iota(flat.begin(), flat.end(), 1);
  std::vector<YoungTableau> out;
  do {
    bool valid = true;
    for (int i = 0; i < rows && valid; ++i) {
      for (int j = 0; j + 1 < cols && valid; ++j) {
        valid = flat[static_cast<size_t>(i * cols + j)] <
                flat[static_cast<size_t>(i * cols + j + 1)];
      }
    }
    for (int j = 0; j < cols && valid; ++j) {
      for (int i = 0; i + 1 < rows && valid; ++i) {
        valid = flat[static_cast<size_t>(i * cols + j)] <
                flat[static_cast<size_t>((i + 1) * cols + j)];
      }
    }
    if (valid) out.push_back(YoungTableau::from_flat(rows, cols, flat));
  } while (std::next_permutation(flat.begin(), flat.end()));
  return out;
}

BigCount extremal_linear_count_product_form(int k, int l) {
  if (k > l) std::swap(k, l);  // the closed form is written for k <= l
  const BigCount numerator = cyclic_es::factorial_big(l * k);
  BigCount denominator = 1;
  for (int m = 1; m <= k + l - 1; ++m) {
    const int exponent = std::min({m, k, k + l - m});
    for (int e = 0; e < exponent; ++e) denominator *= m;
  }
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient,
                                   remainder);
  if (remainder != 0) {
    throw std::logic_error("product-form denominator does not divide");
  }
  return quotient * quotient;
}

Rational exact_mu_bruteforce(int n) {
  std::vector<int> tail(static_cast<size_t>(n - 1));
  std::iota(tail.begin(), tail.end(), 2);
  BigCount total = 0;
  BigCount count = 0;
  std::vector<int> values;
  do {
    values.clear();
    values.push_back(1);
    values.insert(values.end(), tail.begin(), tail.end());
    total += cyclic_longest_monotone_bruteforce(
        CyclicPermutation::from_values(values), Direction::increasing);
    ++count;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return Rational(total, count);
}

}  // namespace oracle
