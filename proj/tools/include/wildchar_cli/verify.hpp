#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildchar/io.hpp"

namespace wildchar::cli {

struct SuiteOptions {
  Backend backend = Backend::exact;
  std::uint64_t seed = 42;
  int count = 100;
  double tol = 1e-9;
  /// Test fixture: flips the sign of the a1 a2 a3 term of P in the fricke
  /// suite so that the harness has something to catch.
  bool inject_sign_error = false;
};

struct SuiteResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  json counterexample;  // null when every sample passed

  bool passed() const { return failures == 0; }
};

/// Suite names in their canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws Error(unknown_suite) for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  json to_json(const SuiteOptions& options) const;
};

/// Runs the named suites (all when empty) in the order given.
VerifyReport run_verify(const std::vector<std::string>& suites, const SuiteOptions& options);

}  // namespace wildchar::cli
