#include "cyclic_es/permutation.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>

namespace cyclic_es {

const char* direction_name(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

Permutation Permutation::from_values(std::vector<int> values) {
  if (values.empty()) {
    throw Error(errc::empty_input, "EmptyInput: expected at least one value");
  }
  const int n = static_cast<int>(values.size());
  for (int pos = 1; pos <= n; ++pos) {
    const int v = values[static_cast<size_t>(pos - 1)];
    if (v < 1 || v > n) {
      std::ostringstream msg;
      msg << "OutOfRangeValue: value " << v << " at position " << pos
          << " lies outside {1,..," << n << "}";
      throw Error(errc::out_of_range_value, msg.str());
    }
  }
  std::vector<int> first_seen(static_cast<size_t>(n) + 1, 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = values[static_cast<size_t>(pos - 1)];
    if (first_seen[static_cast<size_t>(v)] != 0) {
      std::ostringstream msg;
      msg << "DuplicateValue: value " << v << " appears at positions "
          << first_seen[static_cast<size_t>(v)] << " and " << pos;
      throw Error(errc::duplicate_value, msg.str());
    }
    first_seen[static_cast<size_t>(v)] = pos;
  }
  return Permutation(std::move(values), validated_tag{});
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), validated_tag{});
}

Permutation Permutation::reversed(int n) {
  if (n < 1) throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(values), validated_tag{});
}

int Permutation::position_of(int value) const {
  for (int pos = 1; pos <= size(); ++pos) {
    if (value_at(pos) == value) return pos;
  }
  std::ostringstream msg;
  msg << "OutOfRangeValue: value " << value << " does not occur";
  throw Error(errc::out_of_range_value, msg.str());
}

Permutation Permutation::rotated(int start) const {
  const int n = size();
  if (start < 1 || start > n) {
    std::ostringstream msg;
    msg << "InvalidBound: rotation start " << start << " outside 1.." << n;
    throw Error(errc::invalid_bound, msg.str());
  }
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    values.push_back(values_[static_cast<size_t>((start - 1 + t) % n)]);
  }
  return Permutation(std::move(values), validated_tag{});
}

std::vector<Permutation> Permutation::rotations() const {
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(size()));
  for (int start = 1; start <= size(); ++start) out.push_back(rotated(start));
  return out;
}

std::vector<int> Permutation::shifted_up_values() const {
  std::vector<int> values;
  values.reserve(values_.size());
  for (int v : values_) values.push_back(v + 1);
  return values;
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int v : values_) values.push_back(n + 1 - v);
  return Permutation(std::move(values), validated_tag{});
}

std::string Permutation::to_text(bool parenthesized) const {
  return format_values(values_, parenthesized);
}

CyclicPermutation CyclicPermutation::from_values(std::vector<int> values) {
  return of(Permutation::from_values(std::move(values)));
}

CyclicPermutation CyclicPermutation::of(const Permutation& p) {
  return CyclicPermutation(p.rotated(p.position_of(1)));
}

CyclicPermutation CyclicPermutation::increasing(int n) {
  return CyclicPermutation(Permutation::identity(n));
}

CyclicPermutation CyclicPermutation::decreasing(int n) {
  if (n < 1) throw Error(errc::invalid_bound, "InvalidBound: n must be >= 1");
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  values.push_back(1);
  for (int v = n; v >= 2; --v) values.push_back(v);
  return CyclicPermutation(
      Permutation(std::move(values), Permutation::validated_tag{}));
}

std::vector<int> CyclicPermutation::tail_values() const {
  const auto& v = canonical_.values();
  return std::vector<int>(v.begin() + 1, v.end());
}

Permutation shift_down(const std::vector<int>& tail) {
  std::vector<int> values;
  values.reserve(tail.size());
  for (size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] == 1) {
      std::ostringstream msg;
      msg << "ContainsOne: cannot shift down, the value 1 occurs at position "
          << (i + 1);
      throw Error(errc::contains_one, msg.str());
    }
    values.push_back(tail[i] - 1);
  }
  return Permutation::from_values(std::move(values));
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::string_view trimmed(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

}  // namespace

std::vector<int> parse_value_list(std::string_view text) {
  std::string_view body = trimmed(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') {
      throw Error(errc::parse_error, "ParseError: unbalanced parentheses");
    }
    body = trimmed(body.substr(1, body.size() - 2));
  }
  if (body.empty()) {
    throw Error(errc::empty_input, "EmptyInput: expected at least one value");
  }
  std::vector<int> values;
  size_t start = 0;
  while (true) {
    const size_t comma = body.find(',', start);
    const std::string_view token =
        trimmed(body.substr(start, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - start));
    if (token.empty()) {
      throw Error(errc::parse_error, "ParseError: empty value token");
    }
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') {
        std::ostringstream msg;
        msg << "ParseError: token '" << std::string(token)
            << "' is not an unsigned integer";
        throw Error(errc::parse_error, msg.str());
      }
      if (value > 100000000) {
        throw Error(errc::parse_error, "ParseError: value token too large");
      }
      value = value * 10 + (c - '0');
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation::from_values(parse_value_list(text));
}

CyclicPermutation parse_cyclic_permutation(std::string_view text) {
  return CyclicPermutation::from_values(parse_value_list(text));
}

std::string format_values(const std::vector<int>& values, bool parenthesized) {
  std::ostringstream out;
  if (parenthesized) out << '(';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
  if (parenthesized) out << ')';
  return out.str();
}

}  // namespace cyclic_es
