#include "cyclic_es/error.hpp"

namespace cyclic_es {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::duplicate_value: return "DuplicateValue";
    case errc::out_of_range_value: return "OutOfRangeValue";
    case errc::contains_one: return "ContainsOne";
    case errc::invalid_bound: return "InvalidBound";
    case errc::invalid_shape: return "InvalidShape";
    case errc::not_a_permutation_filling: return "NotAPermutationFilling";
    case errc::row_not_increasing: return "RowNotIncreasing";
    case errc::column_not_increasing: return "ColumnNotIncreasing";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::invalid_tableau: return "InvalidTableau";
    case errc::not_extremal: return "NotExtremal";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace cyclic_es
