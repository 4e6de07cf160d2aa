#pragma once

#include <span>
#include <vector>

#include "cyclic_es/permutation.hpp"

namespace cyclic_es {

// Per-position lengths of the longest monotone runs ending at each element:
// inc_ending[t-1] (dec_ending[t-1]) is the length of the longest strictly
// increasing (decreasing) subsequence ending at position t.
struct MonotoneProfile {
  std::vector<int> inc_ending;
  std::vector<int> dec_ending;

  int lis() const;
  int lds() const;
};

// Patience-sorting engine, O(n log n) per direction.
MonotoneProfile monotone_profile(const Permutation& p);
// Independent quadratic dynamic program over the same definition. Both
// routes stay public so they can be cross-checked against each other.
MonotoneProfile monotone_profile_quadratic(const Permutation& p);

int lis_length(const Permutation& p);
int lds_length(const Permutation& p);

// Longest monotone *cyclic* sub-permutation, computed exactly by scanning
// all n rotations (a monotone cyclic sub-permutation is linear in the
// rotation that starts at its first element).
int cyclic_lis_length(const CyclicPermutation& c);
int cyclic_lds_length(const CyclicPermutation& c);

// A maximum-length monotone subsequence with the lexicographically smallest
// 1-based position list among all maximum ones.
SubPermutationWitness linear_witness(const Permutation& p, Direction direction);

// A maximum-length monotone cyclic sub-permutation. Ties are broken by the
// smallest starting rotation of the canonical form, then by the
// lexicographically smallest position list within that rotation; reported
// positions index the canonical form, in traversal order.
SubPermutationWitness cyclic_witness(const CyclicPermutation& c,
                                     Direction direction);

struct ErdosSzekeresReport {
  int k = 0;
  int l = 0;
  int lis = 0;
  int lds = 0;
  bool satisfies = false;  // lis >= k+1 or lds >= l+1
};

// Checks the Erdos-Szekeres condition for bounds k, l >= 1; the condition
// always holds once p has length at least k*l + 1.
ErdosSzekeresReport erdos_szekeres_check(const Permutation& p, int k, int l);

namespace engine {
// Low-level routines over spans of distinct values (the cyclic scans feed
// them rotation windows of a doubled buffer).
int run_length_patience(std::span<const int> values, Direction direction);
std::vector<int> ending_lengths_patience(std::span<const int> values,
                                         Direction direction);
std::vector<int> ending_lengths_quadratic(std::span<const int> values,
                                          Direction direction);
// Lexicographically smallest maximum monotone witness of a linear sequence.
SubPermutationWitness lex_min_max_witness(std::span<const int> values,
                                          Direction direction);
}  // namespace engine

}  // namespace cyclic_es
