#include "doctest.h"
#include "ncdet/verify.hpp"

using namespace ncdet;

namespace {
VerifyConfig small(const std::string& suite, int n = 3, int trials = 4) {
  VerifyConfig cfg;
  cfg.suite = suite;
  cfg.n = n;
  cfg.trials = trials;
  cfg.seed = 5;
  return cfg;
}
}  // namespace

TEST_CASE("suite name table") {
  const auto& names = suite_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "homology");
  CHECK(names.back() == "census");
}

TEST_CASE("each suite passes a short run") {
  for (const std::string& name : suite_names()) {
    const auto reports = run_verify(small(name));
    REQUIRE(reports.size() == 1);
    const RunReport& r = reports.front();
    CHECK(r.suite == name);
    CHECK(r.ok());
    CHECK(r.passes + r.skips + static_cast<int>(r.failures.size()) == r.trials);
    CHECK(r.passes > 0);
  }
}

TEST_CASE("all runs every suite") {
  VerifyConfig cfg = small("all", 2, 2);
  const auto reports = run_verify(cfg);
  CHECK(reports.size() == suite_names().size());
  for (const auto& r : reports) CHECK(r.ok());
}

TEST_CASE("suites accept the other scalar kinds") {
  for (auto tag : {ScalarTag::F64Quaternion, ScalarTag::RationalComplex, ScalarTag::RationalOnly}) {
    VerifyConfig cfg = small("expansion", 3, 3);
    cfg.scalar = tag;
    CHECK(run_verify(cfg).front().ok());
  }
  VerifyConfig cfg = small("norm", 2, 3);
  cfg.scalar = ScalarTag::F64Quaternion;
  CHECK(run_verify(cfg).front().ok());
}

TEST_CASE("input contracts") {
  CHECK_THROWS_AS(run_verify(small("no-such-suite")), ParseError);
  VerifyConfig cfg = small("study");
  cfg.scalar = ScalarTag::RationalComplex;
  CHECK_THROWS_AS(run_verify(cfg), ParseError);
  // "all" substitutes a quaternion kind for the study suite instead of failing.
  VerifyConfig all = small("all", 2, 2);
  all.scalar = ScalarTag::RationalOnly;
  for (const auto& r : run_verify(all)) CHECK(r.ok());
}

TEST_CASE("deterministic under a fixed seed") {
  const auto a = run_verify(small("moore", 3, 5)).front();
  const auto b = run_verify(small("moore", 3, 5)).front();
  CHECK(a.passes == b.passes);
  CHECK(a.skips == b.skips);
}
