#pragma once

#include <cstdint>
#include <vector>

#include "cyclic_es/permutation.hpp"
#include "cyclic_es/tableau.hpp"

namespace cyclic_es {

// Smallest n such that every cyclic permutation of length n contains an
// increasing cyclic sub-permutation of length k+1 or a decreasing one of
// length l+1: alpha(k,l) = (k-1)*(l-1) + 2. Requires k,l >= 1.
int alpha(int k, int l);

enum class ExtremalStructure { i, ii };

const char* structure_name(ExtremalStructure s);

// The two closed-form extremal cycles of length alpha(k,l) - 1 =
// (k-1)*(l-1) + 1, for k,l >= 2. Writing n = (k-1)*(l-1) + 1 and indexing
// the canonical form (a_1 = 1) by t = 2..n:
//   structure i:  a_{(j-1)(l-1)+i+1} = (l-1-i)(k-1) + j + 1
//   structure ii: a_{(i-1)(k-1)+j+1} = (j-1)(l-1) + (l-i) + 1
// for (i,j) in [l-1] x [k-1]. The two coincide exactly when min(k,l) = 2.
CyclicPermutation construct_extremal(int k, int l, ExtremalStructure s);

struct ExtremalReport {
  int k = 0;
  int l = 0;
  int cyclic_lis = 0;
  int cyclic_lds = 0;
  bool is_member = false;  // |c| == alpha-1, cyclic_lis <= k, cyclic_lds <= l
};

// Total check: never throws; non-members simply report is_member = false.
ExtremalReport verify_extremal(const CyclicPermutation& c, int k, int l);

// The block partition that certifies extremality of a constructed cycle.
// The tail positions 2..n of the canonical form split into decreasing-value
// blocks D_1..D_{k-1} and, viewed by value, into increasing runs C_1..C_{l-1}.
// Every cyclic increasing sub-permutation meets each D block in at most 2
// elements, and every cyclic decreasing one meets each C block in at most 2.
struct PartitionWitness {
  int k = 0;
  int l = 0;
  ExtremalStructure structure = ExtremalStructure::i;
  // decreasing_blocks[b] / increasing_blocks[b] list 1-based positions into
  // the canonical form; the values they carry are strictly decreasing /
  // increasing along the listed order.
  std::vector<std::vector<int>> decreasing_blocks;
  std::vector<std::vector<int>> increasing_blocks;
};

PartitionWitness partition_witness(int k, int l, ExtremalStructure s);

// All of C_{k,l}: the extremal cycles of length alpha(k,l)-1, enumerated via
// the tableau-pair bijection on the shifted tails and filtered by
// verify_extremal; sorted lexicographically by canonical form. Throws
// BudgetExceeded when count_syt_rect(l-1,k-1)^2 > budget.
std::vector<CyclicPermutation> enumerate_extremal(
    int k, int l, std::uint64_t budget = kDefaultEnumerationBudget);

struct AlphaReport {
  int k = 0;
  int l = 0;
  int alpha = 0;
  // Cycles of length alpha scanned; true iff every one contains an
  // increasing cyclic sub-permutation of length k+1 or a decreasing one of
  // length l+1.
  std::uint64_t n_tested = 0;
  bool all_forced = false;
  // Cycles of length alpha-1 with cyclic_lis <= k and cyclic_lds <= l,
  // sorted lexicographically by canonical form.
  std::vector<CyclicPermutation> survivors;
};

// Raw exhaustive scan over all (n-1)! canonical tails at n = alpha(k,l) and
// n = alpha(k,l)-1; independent of the tableau route. Throws BudgetExceeded
// when (alpha(k,l)-1)! > budget.
AlphaReport verify_alpha_exhaustive(
    int k, int l, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cyclic_es
