#include <functional>
#include <string>

#include "doctest.h"
#include "ncdet/io.hpp"

using namespace ncdet;

namespace {
std::string msg_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("scalar kind names round-trip") {
  for (auto tag : {ScalarTag::RationalQuaternion, ScalarTag::F64Quaternion,
                   ScalarTag::RationalComplex, ScalarTag::RationalOnly})
    CHECK(tag_from_name(tag_name(tag)) == tag);
  CHECK_THROWS_AS(tag_from_name("octonion"), ParseError);
  CHECK(msg_of([] { tag_from_name("octonion"); }) == "unknown scalar kind \"octonion\"");
}

TEST_CASE("parse then dump is the identity on canonical text") {
  const std::string text = R"({
  "scalar": "rational-quaternion",
  "n": 2,
  "entries": [
    [["1", "1", "0", "0"], ["0", "0", "1", "0"]],
    [["0", "0", "0", "1"], ["2", "0", "0", "0"]]
  ]
})";
  const AnyMatrix m = parse_matrix_text(text);
  CHECK(tag_of(m) == ScalarTag::RationalQuaternion);
  const auto& q = std::get<LabeledMatrix<QuaternionRational>>(m);
  CHECK(q.n() == 2);
  CHECK(q.at(1, 1) == QuaternionRational::one() + QuaternionRational::unit_i());
  const std::string dumped = dump_matrix(m);
  CHECK(dump_matrix(parse_matrix_text(dumped)) == dumped);
}

TEST_CASE("all four kinds parse") {
  const AnyMatrix f = parse_matrix_text(
      R"({"scalar": "f64-quaternion", "n": 1, "entries": [[[1.5, 0, 0, 0]]]})");
  CHECK(std::get<LabeledMatrix<QuaternionF64>>(f).at(1, 1).a == 1.5);
  const AnyMatrix c = parse_matrix_text(
      R"({"scalar": "rational-complex", "n": 1, "entries": [[["1/2", "-3"]]]})");
  CHECK(std::get<LabeledMatrix<ComplexRational>>(c).at(1, 1) ==
        ComplexRational(Rational(1, 2), Rational(-3)));
  const AnyMatrix r =
      parse_matrix_text(R"({"scalar": "rational", "n": 1, "entries": [["7/3"]]})");
  CHECK(std::get<LabeledMatrix<Rational>>(r).at(1, 1) == Rational(7, 3));
}

TEST_CASE("parse diagnostics") {
  CHECK(msg_of([] { parse_matrix_text("not json"); }).substr(0, 13) == "invalid JSON:");
  CHECK(msg_of([] { parse_matrix_text("[1]"); }) == "top level must be an object");
  CHECK(msg_of([] { parse_matrix_text(R"({"scalar": "rational", "n": 1})"); }) ==
        "missing field \"entries\"");
  CHECK(msg_of([] {
          parse_matrix_text(R"({"scalar": "rational", "n": 0, "entries": []})");
        }) == "field \"n\" must be a positive integer");
  CHECK(msg_of([] {
          parse_matrix_text(R"({"scalar": "rational", "n": 2, "entries": [["1", "2"]]})");
        }) == "row count mismatch");
  CHECK(msg_of([] {
          parse_matrix_text(
              R"({"scalar": "rational", "n": 2, "entries": [["1", "2"], ["3"]]})");
        }) == "column count mismatch in row 2");
  CHECK(msg_of([] {
          parse_matrix_text(R"({"scalar": "rational", "n": 1, "entries": [[5]]})");
        }) == "entry (1,1): expected a rational string");
  CHECK(msg_of([] {
          parse_matrix_text(
              R"({"scalar": "rational-quaternion", "n": 1, "entries": [[["1", "2"]]]})");
        }) == "entry (1,1): expected a 4-array quaternion");
  CHECK(msg_of([] {
          parse_matrix_text(
              R"({"scalar": "rational-complex", "n": 1, "entries": [[["1"]]]})");
        }) == "entry (1,1): expected a 2-array complex value");
}
