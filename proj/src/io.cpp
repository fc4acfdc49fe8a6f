#include "ncdet/io.hpp"

#include <fstream>
#include <sstream>

namespace ncdet {

namespace {

using json = nlohmann::ordered_json;

std::string pos(int r, int c) {
  return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

Rational parse_rational_field(const json& j, int r, int c) {
  if (!j.is_string()) throw ParseError(pos(r, c) + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(pos(r, c) + ": " + e.what());
  }
}

double parse_number_field(const json& j, int r, int c) {
  if (!j.is_number()) throw ParseError(pos(r, c) + ": expected a number");
  return j.get<double>();
}

template <class S, class EntryParser>
LabeledMatrix<S> parse_grid(const json& entries, int n, EntryParser parse_entry) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw ParseError("row count mismatch");
  std::vector<S> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("column count mismatch in row " + std::to_string(r + 1));
    for (int c = 0; c < n; ++c) e.push_back(parse_entry(row[c], r, c));
  }
  return LabeledMatrix<S>::fresh(n, std::move(e));
}

QuaternionRational parse_qrat(const json& j, int r, int c) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError(pos(r, c) + ": expected a 4-array quaternion");
  return QuaternionRational(parse_rational_field(j[0], r, c), parse_rational_field(j[1], r, c),
                            parse_rational_field(j[2], r, c), parse_rational_field(j[3], r, c));
}

QuaternionF64 parse_qf64(const json& j, int r, int c) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError(pos(r, c) + ": expected a 4-array quaternion");
  return QuaternionF64(parse_number_field(j[0], r, c), parse_number_field(j[1], r, c),
                       parse_number_field(j[2], r, c), parse_number_field(j[3], r, c));
}

ComplexRational parse_crat(const json& j, int r, int c) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(pos(r, c) + ": expected a 2-array complex value");
  return ComplexRational(parse_rational_field(j[0], r, c), parse_rational_field(j[1], r, c));
}

}  // namespace

const char* tag_name(ScalarTag tag) {
  switch (tag) {
    case ScalarTag::RationalQuaternion: return "rational-quaternion";
    case ScalarTag::F64Quaternion: return "f64-quaternion";
    case ScalarTag::RationalComplex: return "rational-complex";
    case ScalarTag::RationalOnly: return "rational";
  }
  return "rational-quaternion";
}

ScalarTag tag_from_name(const std::string& name) {
  if (name == "rational-quaternion") return ScalarTag::RationalQuaternion;
  if (name == "f64-quaternion") return ScalarTag::F64Quaternion;
  if (name == "rational-complex") return ScalarTag::RationalComplex;
  if (name == "rational") return ScalarTag::RationalOnly;
  throw ParseError("unknown scalar kind \"" + name + "\"");
}

ScalarTag tag_of(const AnyMatrix& m) {
  return static_cast<ScalarTag>(m.index());
}

AnyMatrix parse_matrix_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  for (const char* key : {"scalar", "n", "entries"})
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!doc["scalar"].is_string()) throw ParseError("field \"scalar\" must be a string");
  const ScalarTag tag = tag_from_name(doc["scalar"].get<std::string>());
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
    throw ParseError("field \"n\" must be a positive integer");
  const int n = doc["n"].get<int>();
  const json& entries = doc["entries"];
  switch (tag) {
    case ScalarTag::RationalQuaternion:
      return parse_grid<QuaternionRational>(entries, n, parse_qrat);
    case ScalarTag::F64Quaternion:
      return parse_grid<QuaternionF64>(entries, n, parse_qf64);
    case ScalarTag::RationalComplex:
      return parse_grid<ComplexRational>(entries, n, parse_crat);
    case ScalarTag::RationalOnly:
      return parse_grid<Rational>(entries, n, parse_rational_field);
  }
  throw ParseError("unreachable scalar kind");
}

AnyMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

nlohmann::ordered_json scalar_json(const QuaternionRational& x) {
  return json::array({x.a.str(), x.b.str(), x.c.str(), x.d.str()});
}

nlohmann::ordered_json scalar_json(const QuaternionF64& x) {
  return json::array({x.a, x.b, x.c, x.d});
}

nlohmann::ordered_json scalar_json(const ComplexRational& x) {
  return json::array({x.re.str(), x.im.str()});
}

nlohmann::ordered_json scalar_json(const Rational& x) { return x.str(); }

nlohmann::ordered_json scalar_json(double x) { return x; }

nlohmann::ordered_json matrix_json(const AnyMatrix& m) {
  json doc;
  doc["scalar"] = tag_name(tag_of(m));
  std::visit(
      [&](const auto& mat) {
        doc["n"] = mat.n();
        doc["entries"] = entries_json(mat);
      },
      m);
  return doc;
}

std::string dump_matrix(const AnyMatrix& m) { return matrix_json(m).dump(2) + "\n"; }

}  // namespace ncdet
