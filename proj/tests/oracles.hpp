#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cyclic_es/bigcount.hpp"
#include "cyclic_es/permutation.hpp"
#include "cyclic_es/tableau.hpp"

// Test-side oracles, written independently of the library routines they
// check: subset brute force for monotone lengths, a standalone quadratic DP,
// permutation-scan enumerations, and the squared product-form count.
namespace oracle {

int longest_monotone_bruteforce(std::span<const int> values,
                                cyclic_es::Direction direction);

std::vector<int> ending_lengths_dp(std::span<const int> values,
                                   cyclic_es::Direction direction);
int lis_dp(std::span<const int> values);
int lds_dp(std::span<const int> values);

// Longest monotone cyclic sub-permutation by checking, for every subset of
// canonical positions, whether some cyclic traversal order makes it
// monotone. Exponential; n <= ~16.
int cyclic_longest_monotone_bruteforce(const cyclic_es::CyclicPermutation& c,
                                       cyclic_es::Direction direction);

// Sorted position lists of every maximum-length monotone subsequence.
std::vector<std::vector<int>> all_max_monotone_subsequences(
    std::span<const int> values, cyclic_es::Direction direction);

// The documented cyclic-witness tie-break applied by brute force: smallest
// starting rotation achieving the maximum, then the lexicographically
// smallest position list within that rotation, mapped back to canonical
// positions.
cyclic_es::SubPermutationWitness expected_cyclic_witness(
    const cyclic_es::CyclicPermutation& c, cyclic_es::Direction direction);

// All length-(k*l) permutations with lis <= k and lds <= l, sorted.
std::vector<std::vector<int>> brute_force_extremal_linear(int k, int l);

// Counts of the above for every (k,l) with k*l <= max_total, grouped so each
// factorial scan runs once.
std::map<std::pair<int, int>, cyclic_es::BigCount> brute_force_extremal_counts(
    int max_total);

// Every SYT of the rectangle by scanning all fillings; rows*cols <= ~9.
std::vector<cyclic_es::YoungTableau> brute_force_syt(int rows, int cols);

// Squared ratio of (l*k)! to the staircase product m^min(m,k,l,k+l-m) --
// the displayed closed form for |S_{k,l}|, kept as an independent check on
// the hook-length route.
cyclic_es::BigCount extremal_linear_count_product_form(int k, int l);

// Exact mu(n) via the subset brute force (independent of rotation scans).
cyclic_es::Rational exact_mu_bruteforce(int n);

}  // namespace oracle
