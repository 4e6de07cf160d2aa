#include "cyclic_es/bigcount.hpp"

#include <limits>

namespace cyclic_es {

BigCount factorial_big(int n) {
  BigCount result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

bool fits_uint64(const BigCount& value) {
  return value >= 0 &&
         value <= BigCount(std::numeric_limits<std::uint64_t>::max());
}

std::string to_decimal_string(const BigCount& value) { return value.str(); }

}  // namespace cyclic_es
