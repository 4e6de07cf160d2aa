#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclic_es {

// Exact unbounded counts (hook-length products, factorials, |S_{k,l}|).
using BigCount = boost::multiprecision::cpp_int;
// Exact rationals (averages over full enumerations).
using Rational = boost::multiprecision::cpp_rational;

BigCount factorial_big(int n);

bool fits_uint64(const BigCount& value);
std::string to_decimal_string(const BigCount& value);

}  // namespace cyclic_es
