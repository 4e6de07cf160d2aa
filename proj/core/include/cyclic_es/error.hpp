#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_es {

// Failure codes shared by the library and the CLI front end. The CLI maps
// input/parse failures to exit code 2 and operation failures to exit code 1.
enum class errc {
  empty_input,
  duplicate_value,
  out_of_range_value,
  contains_one,
  invalid_bound,
  invalid_shape,
  not_a_permutation_filling,
  row_not_increasing,
  column_not_increasing,
  shape_mismatch,
  invalid_tableau,
  not_extremal,
  budget_exceeded,
  parse_error,
};

// Stable CamelCase name used in error messages and JSON payloads.
const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace cyclic_es
