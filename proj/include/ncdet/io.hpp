#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "ncdet/matrix.hpp"

namespace ncdet {

enum class ScalarTag { RationalQuaternion, F64Quaternion, RationalComplex, RationalOnly };

const char* tag_name(ScalarTag tag);

/// Parses the external kind name; throws ParseError on anything unknown.
ScalarTag tag_from_name(const std::string& name);

using AnyMatrix =
    std::variant<LabeledMatrix<QuaternionRational>, LabeledMatrix<QuaternionF64>,
                 LabeledMatrix<ComplexRational>, LabeledMatrix<Rational>>;

ScalarTag tag_of(const AnyMatrix& m);

/// Matrix file format: {"scalar": <kind>, "n": <order>, "entries": [[...]]}.
/// Quaternion entries are 4-arrays (rational strings, or numbers for the f64
/// kind), complex entries 2-arrays of rational strings, rational entries
/// plain strings. Throws ParseError with a field diagnostic.
AnyMatrix parse_matrix_text(const std::string& text);

AnyMatrix load_matrix_file(const std::string& path);

nlohmann::ordered_json scalar_json(const QuaternionRational& x);
nlohmann::ordered_json scalar_json(const QuaternionF64& x);
nlohmann::ordered_json scalar_json(const ComplexRational& x);
nlohmann::ordered_json scalar_json(const Rational& x);
nlohmann::ordered_json scalar_json(double x);

nlohmann::ordered_json matrix_json(const AnyMatrix& m);

template <ScalarKind S>
nlohmann::ordered_json entries_json(const LabeledMatrix<S>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.n(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(scalar_json(m.at_pos(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Canonical serialization; parse followed by dump is the identity on
/// canonical files.
std::string dump_matrix(const AnyMatrix& m);

}  // namespace ncdet
