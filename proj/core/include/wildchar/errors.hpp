#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wildchar {

/// Stable, machine-readable error categories. The names returned by
/// error_code_name() are part of the CLI's JSON error contract.
enum class ErrorCode {
  backend_mismatch,
  division_by_zero,
  singular_matrix,
  index_out_of_range,
  parse_error,
  unknown_object,
  unknown_generator,
  invalid_presentation,
  not_composable,
  endpoint_mismatch,
  tree_not_spanning,
  gauge_constraint_violated,
  invalid_root,
  resonant_trace,
  off_surface,
  non_generic_point,
  not_diagonal,
  zero_lambda,
  resonant_lambda,
  boundary_point_s2,
  no_inverse,
  malformed_word,
  unknown_suite,
  io_error,
  usage,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace wildchar
