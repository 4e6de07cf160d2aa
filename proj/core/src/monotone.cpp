#include "cyclic_es/monotone.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cyclic_es {

int MonotoneProfile::lis() const {
  return inc_ending.empty()
             ? 0
             : *std::max_element(inc_ending.begin(), inc_ending.end());
}

int MonotoneProfile::lds() const {
  return dec_ending.empty()
             ? 0
             : *std::max_element(dec_ending.begin(), dec_ending.end());
}

namespace engine {

namespace {

// Index of the pile a value lands on: the first tail that would break strict
// monotonicity. Values are distinct, so lower_bound suffices.
size_t pile_index(const std::vector<int>& tails, int v, Direction dir) {
  if (dir == Direction::increasing) {
    return static_cast<size_t>(
        std::lower_bound(tails.begin(), tails.end(), v) - tails.begin());
  }
  return static_cast<size_t>(
      std::lower_bound(tails.begin(), tails.end(), v, std::greater<int>()) -
      tails.begin());
}

bool extends(int prev, int next, Direction dir) {
  return dir == Direction::increasing ? prev < next : prev > next;
}

}  // namespace

int run_length_patience(std::span<const int> values, Direction direction) {
  std::vector<int> tails;
  tails.reserve(values.size());
  for (int v : values) {
    const size_t idx = pile_index(tails, v, direction);
    if (idx == tails.size()) {
      tails.push_back(v);
    } else {
      tails[idx] = v;
    }
  }
  return static_cast<int>(tails.size());
}

std::vector<int> ending_lengths_patience(std::span<const int> values,
                                         Direction direction) {
  std::vector<int> tails;
  tails.reserve(values.size());
  std::vector<int> lengths;
  lengths.reserve(values.size());
  for (int v : values) {
    const size_t idx = pile_index(tails, v, direction);
    if (idx == tails.size()) {
      tails.push_back(v);
    } else {
      tails[idx] = v;
    }
    lengths.push_back(static_cast<int>(idx) + 1);
  }
  return lengths;
}

std::vector<int> ending_lengths_quadratic(std::span<const int> values,
                                          Direction direction) {
  const size_t n = values.size();
  std::vector<int> lengths(n, 1);
  for (size_t t = 0; t < n; ++t) {
    for (size_t s = 0; s < t; ++s) {
      if (extends(values[s], values[t], direction) &&
          lengths[s] + 1 > lengths[t]) {
        lengths[t] = lengths[s] + 1;
      }
    }
  }
  return lengths;
}

SubPermutationWitness lex_min_max_witness(std::span<const int> values,
                                          Direction direction) {
  const int n = static_cast<int>(values.size());
  // starting_lengths[t] = longest monotone run that begins at position t.
  std::vector<int> starting_lengths(static_cast<size_t>(n), 1);
  for (int t = n - 2; t >= 0; --t) {
    for (int s = t + 1; s < n; ++s) {
      if (extends(values[static_cast<size_t>(t)],
                  values[static_cast<size_t>(s)], direction) &&
          starting_lengths[static_cast<size_t>(s)] + 1 >
              starting_lengths[static_cast<size_t>(t)]) {
        starting_lengths[static_cast<size_t>(t)] =
            starting_lengths[static_cast<size_t>(s)] + 1;
      }
    }
  }
  const int total = n == 0 ? 0
                           : *std::max_element(starting_lengths.begin(),
                                               starting_lengths.end());
  SubPermutationWitness w;
  w.direction = direction;
  int prev = -1;
  for (int remaining = total; remaining >= 1; --remaining) {
    for (int t = prev + 1; t < n; ++t) {
      if (starting_lengths[static_cast<size_t>(t)] != remaining) continue;
      if (prev >= 0 && !extends(values[static_cast<size_t>(prev)],
                                values[static_cast<size_t>(t)], direction)) {
        continue;
      }
      // Any compatible continuation has starting length <= remaining, so the
      // first hit is the lexicographically smallest viable choice.
      w.positions.push_back(t + 1);
      w.values.push_back(values[static_cast<size_t>(t)]);
      prev = t;
      break;
    }
  }
  return w;
}

}  // namespace engine

MonotoneProfile monotone_profile(const Permutation& p) {
  std::span<const int> v(p.values());
  return MonotoneProfile{
      engine::ending_lengths_patience(v, Direction::increasing),
      engine::ending_lengths_patience(v, Direction::decreasing)};
}

MonotoneProfile monotone_profile_quadratic(const Permutation& p) {
  std::span<const int> v(p.values());
  return MonotoneProfile{
      engine::ending_lengths_quadratic(v, Direction::increasing),
      engine::ending_lengths_quadratic(v, Direction::decreasing)};
}

int lis_length(const Permutation& p) {
  return engine::run_length_patience(p.values(), Direction::increasing);
}

int lds_length(const Permutation& p) {
  return engine::run_length_patience(p.values(), Direction::decreasing);
}

namespace {

int cyclic_run_length(const CyclicPermutation& c, Direction direction) {
  const std::vector<int>& values = c.canonical().values();
  const int n = c.size();
  std::vector<int> doubled(values);
  doubled.insert(doubled.end(), values.begin(), values.end());
  std::vector<int> tails;
  tails.reserve(static_cast<size_t>(n));
  int best = 0;
  for (int r = 0; r < n && best < n; ++r) {
    tails.clear();
    for (int t = r; t < r + n; ++t) {
      const int v = doubled[static_cast<size_t>(t)];
      const size_t idx = [&] {
        if (direction == Direction::increasing) {
          return static_cast<size_t>(
              std::lower_bound(tails.begin(), tails.end(), v) - tails.begin());
        }
        return static_cast<size_t>(std::lower_bound(tails.begin(), tails.end(),
                                                    v, std::greater<int>()) -
                                   tails.begin());
      }();
      if (idx == tails.size()) {
        tails.push_back(v);
      } else {
        tails[idx] = v;
      }
    }
    best = std::max(best, static_cast<int>(tails.size()));
  }
  return best;
}

}  // namespace

int cyclic_lis_length(const CyclicPermutation& c) {
  return cyclic_run_length(c, Direction::increasing);
}

int cyclic_lds_length(const CyclicPermutation& c) {
  return cyclic_run_length(c, Direction::decreasing);
}

SubPermutationWitness linear_witness(const Permutation& p,
                                     Direction direction) {
  return engine::lex_min_max_witness(p.values(), direction);
}

SubPermutationWitness cyclic_witness(const CyclicPermutation& c,
                                     Direction direction) {
  const std::vector<int>& values = c.canonical().values();
  const int n = c.size();
  std::vector<int> doubled(values);
  doubled.insert(doubled.end(), values.begin(), values.end());
  std::span<const int> window(doubled);

  int best = 0;
  int best_rotation = 0;
  for (int r = 0; r < n; ++r) {
    const int len = engine::run_length_patience(
        window.subspan(static_cast<size_t>(r), static_cast<size_t>(n)),
        direction);
    if (len > best) {
      best = len;
      best_rotation = r;
    }
  }
  SubPermutationWitness w = engine::lex_min_max_witness(
      window.subspan(static_cast<size_t>(best_rotation),
                     static_cast<size_t>(n)),
      direction);
  for (int& pos : w.positions) {
    pos = (best_rotation + pos - 1) % n + 1;
  }
  return w;
}

ErdosSzekeresReport erdos_szekeres_check(const Permutation& p, int k, int l) {
  if (k < 1 || l < 1) {
    std::ostringstream msg;
    msg << "InvalidBound: k and l must be >= 1, got k=" << k << ", l=" << l;
    throw Error(errc::invalid_bound, msg.str());
  }
  ErdosSzekeresReport report;
  report.k = k;
  report.l = l;
  report.lis = lis_length(p);
  report.lds = lds_length(p);
  report.satisfies = report.lis >= k + 1 || report.lds >= l + 1;
  return report;
}

}  // namespace cyclic_es
