#pragma once

#include <string>
#include <vector>

#include "ncdet/io.hpp"

namespace ncdet {

struct VerifyConfig {
  std::string suite = "all";
  int n = 3;
  int trials = 100;
  unsigned long long seed = 42;
  ScalarTag scalar = ScalarTag::RationalQuaternion;
  int cap = 6;
  Tolerance tol;
};

struct FailureRecord {
  int trial = 0;
  unsigned long long seed = 0;
  std::string message;
  std::string matrix;
};

struct RunReport {
  std::string suite;
  int trials = 0;
  int passes = 0;
  int skips = 0;
  std::vector<FailureRecord> failures;
  double wall_ms = 0.0;
  bool ok() const { return failures.empty(); }
};

/// Names of the individual suites, in canonical order ("all" not included).
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws ParseError on an unknown
/// suite name or an unusable suite/scalar combination.
std::vector<RunReport> run_verify(const VerifyConfig& cfg);

}  // namespace ncdet
