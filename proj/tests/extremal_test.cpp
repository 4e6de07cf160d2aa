#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cyclic_es/extremal.hpp"
#include "cyclic_es/monotone.hpp"
#include "cyclic_es/tableau.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using cyclic_es::CyclicPermutation;
using cyclic_es::Direction;
using cyclic_es::errc;
using cyclic_es::ExtremalStructure;
using cyclic_es::Permutation;
using testsupport::thrown_code;

namespace {

const std::vector<int> kStructI45{1, 11, 8, 5, 2, 12, 9, 6, 3, 13, 10, 7, 4};
const std::vector<int> kStructII45{1, 5, 9, 13, 4, 8, 12, 3, 7, 11, 2, 6, 10};

}  // namespace

TEST_CASE("alpha follows (k-1)(l-1)+2") {
  CHECK(cyclic_es::alpha(1, 1) == 2);
  CHECK(cyclic_es::alpha(1, 7) == 2);
  CHECK(cyclic_es::alpha(7, 1) == 2);
  CHECK(cyclic_es::alpha(2, 2) == 3);
  CHECK(cyclic_es::alpha(3, 3) == 6);
  CHECK(cyclic_es::alpha(4, 5) == 14);
  CHECK(cyclic_es::alpha(5, 4) == 14);
  CHECK(cyclic_es::alpha(2, 9) == 10);
  CHECK(thrown_code([] { cyclic_es::alpha(0, 3); }) == errc::invalid_bound);
}

TEST_CASE("construct_extremal reproduces the closed forms") {
  CHECK(cyclic_es::construct_extremal(4, 5, ExtremalStructure::i) ==
        CyclicPermutation::from_values(kStructI45));
  CHECK(cyclic_es::construct_extremal(4, 5, ExtremalStructure::ii) ==
        CyclicPermutation::from_values(kStructII45));

  CHECK(cyclic_es::construct_extremal(3, 3, ExtremalStructure::i) ==
        CyclicPermutation::from_values({1, 4, 2, 5, 3}));
  CHECK(cyclic_es::construct_extremal(3, 3, ExtremalStructure::ii) ==
        CyclicPermutation::from_values({1, 3, 5, 2, 4}));

  // min(k,l) = 2 collapses both structures to a single cycle.
  for (const auto s : {ExtremalStructure::i, ExtremalStructure::ii}) {
    CHECK(cyclic_es::construct_extremal(2, 2, s) ==
          CyclicPermutation::from_values({1, 2}));
    CHECK(cyclic_es::construct_extremal(2, 5, s) ==
          CyclicPermutation::decreasing(5));
    CHECK(cyclic_es::construct_extremal(5, 2, s) ==
          CyclicPermutation::increasing(5));
  }

  CHECK(thrown_code([] {
          cyclic_es::construct_extremal(1, 5, ExtremalStructure::i);
        }) == errc::invalid_bound);
}

TEST_CASE("verify_extremal reports membership without throwing") {
  const auto member = cyclic_es::verify_extremal(
      CyclicPermutation::from_values(kStructI45), 4, 5);
  CHECK(member.is_member);
  CHECK(member.cyclic_lis == 4);
  CHECK(member.cyclic_lds == 5);

  // Same cycle against swapped bounds: right length, one run too long.
  const auto swapped = cyclic_es::verify_extremal(
      CyclicPermutation::from_values(kStructI45), 5, 4);
  CHECK_FALSE(swapped.is_member);
  CHECK(swapped.cyclic_lds == 5);

  CHECK_FALSE(cyclic_es::verify_extremal(CyclicPermutation::increasing(5), 4, 5)
                  .is_member);  // wrong length
  CHECK_FALSE(cyclic_es::verify_extremal(CyclicPermutation::decreasing(13), 4, 5)
                  .is_member);  // decreasing run of 13
  CHECK(cyclic_es::verify_extremal(CyclicPermutation::increasing(1), 1, 1)
            .is_member);
}

TEST_CASE("partition_witness freezes the certificate blocks") {
  const auto wi = cyclic_es::partition_witness(4, 5, ExtremalStructure::i);
  CHECK(wi.decreasing_blocks ==
        std::vector<std::vector<int>>{
            {2, 3, 4, 5}, {6, 7, 8, 9}, {10, 11, 12, 13}});
  CHECK(wi.increasing_blocks ==
        std::vector<std::vector<int>>{
            {5, 9, 13}, {4, 8, 12}, {3, 7, 11}, {2, 6, 10}});

  const auto wii = cyclic_es::partition_witness(4, 5, ExtremalStructure::ii);
  CHECK(wii.increasing_blocks ==
        std::vector<std::vector<int>>{
            {2, 3, 4}, {5, 6, 7}, {8, 9, 10}, {11, 12, 13}});
  CHECK(wii.decreasing_blocks ==
        std::vector<std::vector<int>>{
            {2, 5, 8, 11}, {3, 6, 9, 12}, {4, 7, 10, 13}});

  // Check the values the structure-i blocks carry on the actual cycle.
  const auto c = cyclic_es::construct_extremal(4, 5, ExtremalStructure::i);
  auto values_at = [&](const std::vector<int>& positions) {
    std::vector<int> out;
    for (int p : positions) out.push_back(c.canonical().value_at(p));
    return out;
  };
  CHECK(values_at(wi.decreasing_blocks[0]) == std::vector<int>{11, 8, 5, 2});
  CHECK(values_at(wi.decreasing_blocks[1]) == std::vector<int>{12, 9, 6, 3});
  CHECK(values_at(wi.decreasing_blocks[2]) == std::vector<int>{13, 10, 7, 4});
  CHECK(values_at(wi.increasing_blocks[0]) == std::vector<int>{2, 3, 4});
  CHECK(values_at(wi.increasing_blocks[3]) == std::vector<int>{11, 12, 13});

  const auto tiny = cyclic_es::partition_witness(2, 2, ExtremalStructure::i);
  CHECK(tiny.decreasing_blocks == std::vector<std::vector<int>>{{2}});
  CHECK(tiny.increasing_blocks == std::vector<std::vector<int>>{{2}});

  CHECK(thrown_code([] {
          cyclic_es::partition_witness(5, 1, ExtremalStructure::ii);
        }) == errc::invalid_bound);
}

TEST_CASE("enumerate_extremal lists C_{k,l} in canonical order") {
  CHECK(cyclic_es::enumerate_extremal(3, 3) ==
        std::vector<CyclicPermutation>{
            CyclicPermutation::from_values({1, 3, 5, 2, 4}),
            CyclicPermutation::from_values({1, 4, 2, 5, 3})});
  CHECK(cyclic_es::enumerate_extremal(2, 2) ==
        std::vector<CyclicPermutation>{CyclicPermutation::from_values({1, 2})});
  CHECK(cyclic_es::enumerate_extremal(2, 6) ==
        std::vector<CyclicPermutation>{CyclicPermutation::decreasing(6)});
  CHECK(cyclic_es::enumerate_extremal(4, 2) ==
        std::vector<CyclicPermutation>{CyclicPermutation::increasing(4)});

  CHECK(thrown_code([] { cyclic_es::enumerate_extremal(5, 5); }) ==
        errc::budget_exceeded);
  CHECK(thrown_code([] { cyclic_es::enumerate_extremal(4, 4, 100); }) ==
        errc::budget_exceeded);
  CHECK(thrown_code([] { cyclic_es::enumerate_extremal(1, 3); }) ==
        errc::invalid_bound);
}

TEST_CASE("verify_alpha_exhaustive scans both thresholds") {
  const auto tiny = cyclic_es::verify_alpha_exhaustive(2, 2);
  CHECK(tiny.alpha == 3);
  CHECK(tiny.n_tested == 2);
  CHECK(tiny.all_forced);
  CHECK(tiny.survivors ==
        std::vector<CyclicPermutation>{CyclicPermutation::from_values({1, 2})});

  const auto unit = cyclic_es::verify_alpha_exhaustive(1, 1);
  CHECK(unit.alpha == 2);
  CHECK(unit.all_forced);
  CHECK(unit.survivors ==
        std::vector<CyclicPermutation>{CyclicPermutation::increasing(1)});

  const auto three = cyclic_es::verify_alpha_exhaustive(3, 3);
  CHECK(three.n_tested == 120);
  CHECK(three.all_forced);
  CHECK(three.survivors == cyclic_es::enumerate_extremal(3, 3));

  for (const auto [k, l] : {std::pair{3, 4}, std::pair{4, 3}}) {
    const auto report = cyclic_es::verify_alpha_exhaustive(k, l);
    CHECK(report.all_forced);
    CHECK(report.survivors == cyclic_es::enumerate_extremal(k, l));
  }

  CHECK(thrown_code([] { cyclic_es::verify_alpha_exhaustive(3, 3, 10); }) ==
        errc::budget_exceeded);
}

TEST_CASE("property: both structures verify and coincide exactly at min 2") {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= 6; ++l) {
      const auto ci = cyclic_es::construct_extremal(k, l, ExtremalStructure::i);
      const auto cii =
          cyclic_es::construct_extremal(k, l, ExtremalStructure::ii);
      CHECK(cyclic_es::verify_extremal(ci, k, l).is_member);
      CHECK(cyclic_es::verify_extremal(cii, k, l).is_member);
      CHECK((ci == cii) == (std::min(k, l) == 2));
    }
  }
}

TEST_CASE("property: canonical tails shift down into S_{k-1,l-1}") {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= 6; ++l) {
      for (const auto s : {ExtremalStructure::i, ExtremalStructure::ii}) {
        std::vector<int> tail =
            cyclic_es::construct_extremal(k, l, s).tail_values();
        for (int& v : tail) --v;
        const Permutation p = Permutation::from_values(std::move(tail));
        CHECK(p.size() == (k - 1) * (l - 1));
        CHECK(cyclic_es::lis_length(p) <= k - 1);
        CHECK(cyclic_es::lds_length(p) <= l - 1);
      }
    }
  }
}

TEST_CASE("property: partition blocks certify the extremal bounds") {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= 6; ++l) {
      for (const auto s : {ExtremalStructure::i, ExtremalStructure::ii}) {
        const auto c = cyclic_es::construct_extremal(k, l, s);
        const auto w = cyclic_es::partition_witness(k, l, s);
        REQUIRE(w.decreasing_blocks.size() == static_cast<size_t>(k - 1));
        REQUIRE(w.increasing_blocks.size() == static_cast<size_t>(l - 1));

        // Each family partitions the tail positions 2..n exactly.
        for (const auto* family : {&w.decreasing_blocks, &w.increasing_blocks}) {
          std::vector<int> all;
          for (const auto& block : *family)
            all.insert(all.end(), block.begin(), block.end());
          std::sort(all.begin(), all.end());
          std::vector<int> expected;
          for (int t = 2; t <= c.size(); ++t) expected.push_back(t);
          CHECK(all == expected);
        }

        // Values run strictly down D blocks and strictly up C blocks.
        for (const auto& block : w.decreasing_blocks) {
          for (size_t q = 1; q < block.size(); ++q) {
            CHECK(block[q - 1] < block[q]);
            CHECK(c.canonical().value_at(block[q - 1]) >
                  c.canonical().value_at(block[q]));
          }
        }
        for (const auto& block : w.increasing_blocks) {
          for (size_t q = 1; q < block.size(); ++q) {
            CHECK(block[q - 1] < block[q]);
            CHECK(c.canonical().value_at(block[q - 1]) <
                  c.canonical().value_at(block[q]));
          }
        }

        // A maximum monotone cyclic sub-permutation meets each opposing
        // block at most twice (once per side of the rotation cut).
        const auto inc = cyclic_es::cyclic_witness(c, Direction::increasing);
        const auto dec = cyclic_es::cyclic_witness(c, Direction::decreasing);
        auto overlap = [](const std::vector<int>& witness_positions,
                          const std::vector<int>& block) {
          int count = 0;
          for (int p : witness_positions)
            count += std::count(block.begin(), block.end(), p) > 0 ? 1 : 0;
          return count;
        };
        for (const auto& block : w.decreasing_blocks)
          CHECK(overlap(inc.positions, block) <= 2);
        for (const auto& block : w.increasing_blocks)
          CHECK(overlap(dec.positions, block) <= 2);
      }
    }
  }
}

TEST_CASE("property: enumeration count is 1 below min 3, else 2") {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= 6; ++l) {
      const cyclic_es::BigCount per = cyclic_es::count_syt_rect(l - 1, k - 1);
      const cyclic_es::BigCount pairs = per * per;
      if (pairs > cyclic_es::kDefaultEnumerationBudget) continue;
      const auto members = cyclic_es::enumerate_extremal(k, l);
      const size_t expected = std::min(k, l) <= 2 ? 1 : 2;
      CHECK(members.size() == expected);
      std::set<CyclicPermutation> constructed{
          cyclic_es::construct_extremal(k, l, ExtremalStructure::i),
          cyclic_es::construct_extremal(k, l, ExtremalStructure::ii)};
      CHECK(std::set<CyclicPermutation>(members.begin(), members.end()) ==
            constructed);
    }
  }
}
