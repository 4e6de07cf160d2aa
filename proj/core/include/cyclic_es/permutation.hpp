#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclic_es/error.hpp"

namespace cyclic_es {

enum class Direction { increasing, decreasing };

const char* direction_name(Direction d);

// A linear arrangement of the values 1..n. Positions are 1-based in every
// public accessor and in all serialized output; storage is 0-based.
class Permutation {
 public:
  // Validates that `values` is a bijection onto {1,..,n}. Throws EmptyInput,
  // OutOfRangeValue or DuplicateValue, naming the offending value and its
  // 1-based position(s).
  static Permutation from_values(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation reversed(int n);  // n, n-1, ..., 1

  int size() const { return static_cast<int>(values_.size()); }

  // Value at 1-based position.
  int value_at(int pos) const { return values_[static_cast<size_t>(pos - 1)]; }
  // 1-based position of a value.
  int position_of(int value) const;

  const std::vector<int>& values() const { return values_; }

  // The rotation that starts at 1-based position `start` (start = 1 is *this).
  Permutation rotated(int start) const;
  // All n rotations, ordered by starting position.
  std::vector<Permutation> rotations() const;

  // Every value incremented by one, yielding an arrangement of 2..n+1
  // (a cyclic tail; see shift_down for the inverse).
  std::vector<int> shifted_up_values() const;

  // Values mapped a -> n+1-a; swaps increasing and decreasing runs.
  Permutation complemented() const;

  bool operator==(const Permutation&) const = default;

  // Comma-separated values, optionally parenthesized: "2,1,3" or "(2,1,3)".
  std::string to_text(bool parenthesized = false) const;

 private:
  struct validated_tag {};
  Permutation(std::vector<int> values, validated_tag)
      : values_(std::move(values)) {}

  std::vector<int> values_;

  friend class CyclicPermutation;
};

// A rotation-equivalence class of permutations, stored canonically as the
// rotation that starts at the value 1.
class CyclicPermutation {
 public:
  static CyclicPermutation from_values(std::vector<int> values);
  static CyclicPermutation of(const Permutation& p);
  static CyclicPermutation increasing(int n);  // (1,2,...,n)
  static CyclicPermutation decreasing(int n);  // (1,n,n-1,...,2)

  int size() const { return canonical_.size(); }
  const Permutation& canonical() const { return canonical_; }

  // The canonical sequence with the leading 1 removed (values 2..n).
  std::vector<int> tail_values() const;

  bool operator==(const CyclicPermutation&) const = default;
  // Lexicographic order on the canonical value sequence.
  bool operator<(const CyclicPermutation& other) const {
    return canonical_.values() < other.canonical_.values();
  }

  std::string to_text() const { return canonical_.to_text(true); }

 private:
  explicit CyclicPermutation(Permutation canonical)
      : canonical_(std::move(canonical)) {}
  Permutation canonical_;
};

// One monotone sub-permutation, reported with 1-based positions into the
// host sequence (for cyclic hosts: positions in the canonical rotation,
// listed in traversal order starting from the witness's first element).
struct SubPermutationWitness {
  std::vector<int> positions;
  std::vector<int> values;
  Direction direction = Direction::increasing;

  int length() const { return static_cast<int>(values.size()); }
  bool operator==(const SubPermutationWitness&) const = default;
};

// Shift-down of a tail value list (a canonical cycle with its leading 1
// removed, i.e. an arrangement of 2..n+1): every value decremented by one.
// A raw value list rather than a Permutation, because a tail is not a
// permutation of 1..n until after the shift. Throws ContainsOne when the
// value 1 occurs; other defects surface through Permutation::from_values.
Permutation shift_down(const std::vector<int>& tail);

// Parses "6,1,4,2" or "(6,1,4,2)"; whitespace around tokens is ignored.
// Malformed text raises ParseError; value-level problems propagate from
// Permutation::from_values.
std::vector<int> parse_value_list(std::string_view text);
Permutation parse_permutation(std::string_view text);
CyclicPermutation parse_cyclic_permutation(std::string_view text);

std::string format_values(const std::vector<int>& values,
                          bool parenthesized = false);

}  // namespace cyclic_es
