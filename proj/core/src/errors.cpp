#include "wildchar/errors.hpp"

namespace wildchar {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::backend_mismatch: return "backend_mismatch";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::unknown_object: return "unknown_object";
    case ErrorCode::unknown_generator: return "unknown_generator";
    case ErrorCode::invalid_presentation: return "invalid_presentation";
    case ErrorCode::not_composable: return "not_composable";
    case ErrorCode::endpoint_mismatch: return "endpoint_mismatch";
    case ErrorCode::tree_not_spanning: return "tree_not_spanning";
    case ErrorCode::gauge_constraint_violated: return "gauge_constraint_violated";
    case ErrorCode::invalid_root: return "invalid_root";
    case ErrorCode::resonant_trace: return "resonant_trace";
    case ErrorCode::off_surface: return "off_surface";
    case ErrorCode::non_generic_point: return "non_generic_point";
    case ErrorCode::not_diagonal: return "not_diagonal";
    case ErrorCode::zero_lambda: return "zero_lambda";
    case ErrorCode::resonant_lambda: return "resonant_lambda";
    case ErrorCode::boundary_point_s2: return "boundary_point_s2";
    case ErrorCode::no_inverse: return "no_inverse";
    case ErrorCode::malformed_word: return "malformed_word";
    case ErrorCode::unknown_suite: return "unknown_suite";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace wildchar
