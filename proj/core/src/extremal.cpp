#include "cyclic_es/extremal.hpp"

#include <algorithm>
#include <sstream>

#include "cyclic_es/grid.hpp"
#include "cyclic_es/monotone.hpp"

namespace cyclic_es {

namespace {

void require_bounds(int k, int l, int minimum) {
  if (k < minimum || l < minimum) {
    std::ostringstream msg;
    msg << "InvalidBound: k and l must be >= " << minimum << ", got k=" << k
        << ", l=" << l;
    throw Error(errc::invalid_bound, msg.str());
  }
}

// 1-based canonical position of the (i,j) entry of each structure.
int position_i(int i, int j, int l) { return (j - 1) * (l - 1) + i + 1; }
int position_ii(int i, int j, int k) { return (i - 1) * (k - 1) + j + 1; }

int value_i(int i, int j, int k, int l) {
  return (l - 1 - i) * (k - 1) + j + 1;
}
int value_ii(int i, int j, int l) { return (j - 1) * (l - 1) + (l - i) + 1; }

}  // namespace

int alpha(int k, int l) {
  require_bounds(k, l, 1);
  return (k - 1) * (l - 1) + 2;
}

const char* structure_name(ExtremalStructure s) {
  return s == ExtremalStructure::i ? "i" : "ii";
}

CyclicPermutation construct_extremal(int k, int l, ExtremalStructure s) {
  require_bounds(k, l, 2);
  const int n = (k - 1) * (l - 1) + 1;
  std::vector<int> values(static_cast<size_t>(n), 0);
  values[0] = 1;
  for (int i = 1; i <= l - 1; ++i) {
    for (int j = 1; j <= k - 1; ++j) {
      if (s == ExtremalStructure::i) {
        values[static_cast<size_t>(position_i(i, j, l) - 1)] =
            value_i(i, j, k, l);
      } else {
        values[static_cast<size_t>(position_ii(i, j, k) - 1)] =
            value_ii(i, j, l);
      }
    }
  }
  return CyclicPermutation::from_values(std::move(values));
}

ExtremalReport verify_extremal(const CyclicPermutation& c, int k, int l) {
  ExtremalReport report;
  report.k = k;
  report.l = l;
  report.cyclic_lis = cyclic_lis_length(c);
  report.cyclic_lds = cyclic_lds_length(c);
  report.is_member = k >= 1 && l >= 1 &&
                     c.size() == (k - 1) * (l - 1) + 1 &&
                     report.cyclic_lis <= k && report.cyclic_lds <= l;
  return report;
}

PartitionWitness partition_witness(int k, int l, ExtremalStructure s) {
  require_bounds(k, l, 2);
  PartitionWitness w;
  w.k = k;
  w.l = l;
  w.structure = s;
  w.decreasing_blocks.assign(static_cast<size_t>(k - 1), {});
  w.increasing_blocks.assign(static_cast<size_t>(l - 1), {});
  if (s == ExtremalStructure::i) {
    // D_j walks a position-consecutive block; C_b collects the positions of
    // the value range (b-1)(k-1)+2 .. b(k-1)+1 in increasing value order.
    for (int j = 1; j <= k - 1; ++j) {
      for (int i = 1; i <= l - 1; ++i) {
        w.decreasing_blocks[static_cast<size_t>(j - 1)].push_back(
            position_i(i, j, l));
      }
    }
    for (int b = 1; b <= l - 1; ++b) {
      for (int j = 1; j <= k - 1; ++j) {
        w.increasing_blocks[static_cast<size_t>(b - 1)].push_back(
            position_i(l - b, j, l));
      }
    }
  } else {
    // Mirror image: C_i is position-consecutive, D_b follows a value range
    // (b-1)(l-1)+2 .. b(l-1)+1 in decreasing value order.
    for (int i = 1; i <= l - 1; ++i) {
      for (int j = 1; j <= k - 1; ++j) {
        w.increasing_blocks[static_cast<size_t>(i - 1)].push_back(
            position_ii(i, j, k));
      }
    }
    for (int b = 1; b <= k - 1; ++b) {
      for (int i = 1; i <= l - 1; ++i) {
        w.decreasing_blocks[static_cast<size_t>(b - 1)].push_back(
            position_ii(i, b, k));
      }
    }
  }
  return w;
}

std::vector<CyclicPermutation> enumerate_extremal(int k, int l,
                                                  std::uint64_t budget) {
  require_bounds(k, l, 2);
  const BigCount per_tableau = count_syt_rect(l - 1, k - 1);
  const BigCount pair_count = per_tableau * per_tableau;
  if (pair_count > BigCount(budget)) {
    std::ostringstream msg;
    msg << "BudgetExceeded: " << pair_count.str() << " tableau pairs for C_{"
        << k << "," << l << "} exceed the cap of " << budget;
    throw Error(errc::budget_exceeded, msg.str());
  }
  const std::vector<YoungTableau> tableaux =
      enumerate_syt_rect(l - 1, k - 1, budget);
  std::vector<CyclicPermutation> members;
  for (const YoungTableau& ranking : tableaux) {
    for (const YoungTableau& valuation : tableaux) {
      // Linear member of S_{k-1,l-1} -> cycle candidate: shift every value
      // up by one and open the cycle at a prepended 1.
      const Permutation linear = phi_inverse(ranking, valuation);
      std::vector<int> values;
      values.reserve(static_cast<size_t>(linear.size()) + 1);
      values.push_back(1);
      for (int v : linear.shifted_up_values()) values.push_back(v);
      CyclicPermutation candidate =
          CyclicPermutation::from_values(std::move(values));
      if (verify_extremal(candidate, k, l).is_member) {
        members.push_back(std::move(candidate));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

AlphaReport verify_alpha_exhaustive(int k, int l, std::uint64_t budget) {
  require_bounds(k, l, 1);
  AlphaReport report;
  report.k = k;
  report.l = l;
  report.alpha = alpha(k, l);
  if (factorial_big(report.alpha - 1) > BigCount(budget)) {
    std::ostringstream msg;
    msg << "BudgetExceeded: scanning alpha(" << k << "," << l
        << ") = " << report.alpha << " needs " << (report.alpha - 1)
        << "! cycles, more than the cap of " << budget;
    throw Error(errc::budget_exceeded, msg.str());
  }

  auto scan = [](int n, auto&& visit) {
    std::vector<int> tail(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int i = 0; i < n - 1; ++i) tail[static_cast<size_t>(i)] = i + 2;
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    do {
      values.clear();
      values.push_back(1);
      values.insert(values.end(), tail.begin(), tail.end());
      visit(CyclicPermutation::from_values(values));
    } while (std::next_permutation(tail.begin(), tail.end()));
  };

  report.all_forced = true;
  scan(report.alpha, [&](const CyclicPermutation& c) {
    ++report.n_tested;
    if (cyclic_lis_length(c) < k + 1 && cyclic_lds_length(c) < l + 1) {
      report.all_forced = false;
    }
  });
  scan(report.alpha - 1, [&](const CyclicPermutation& c) {
    if (cyclic_lis_length(c) <= k && cyclic_lds_length(c) <= l) {
      report.survivors.push_back(c);
    }
  });
  std::sort(report.survivors.begin(), report.survivors.end());
  return report;
}

}  // namespace cyclic_es
