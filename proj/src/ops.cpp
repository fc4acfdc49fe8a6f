#include "ncdet/ops.hpp"

#include <cmath>
#include <cstdlib>

#include "ncdet/dets.hpp"
#include "ncdet/permanents.hpp"
#include "ncdet/quasidet.hpp"

namespace ncdet {
namespace {

using json = nlohmann::ordered_json;

json real_json(const Rational& x, bool as_float) {
  if (as_float) return x.to_double();
  return x.str();
}

json real_json(double x, bool) { return x; }

json value_json(const QuaternionRational& x, bool as_float) {
  return json::array({real_json(x.a, as_float), real_json(x.b, as_float),
                      real_json(x.c, as_float), real_json(x.d, as_float)});
}

json value_json(const QuaternionF64& x, bool) { return json::array({x.a, x.b, x.c, x.d}); }

json value_json(const ComplexRational& x, bool as_float) {
  return json::array({real_json(x.re, as_float), real_json(x.im, as_float)});
}

json value_json(const Rational& x, bool as_float) { return real_json(x, as_float); }

}  // namespace

int default_cap() {
  if (const char* s = std::getenv("NCDET_MAX_N")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 6;
}

json op_quasidet(const AnyMatrix& m, int row, int col, bool as_float) {
  return std::visit(
      [&](const auto& a) {
        const auto r = quasidet_block(a, row, col);
        json doc;
        doc["op"] = "quasidet";
        doc["row"] = row;
        doc["col"] = col;
        doc["defined"] = r.defined;
        if (r.defined)
          doc["value"] = value_json(r.value, as_float);
        else
          doc["error"] = "undefined: A^{ij} not invertible";
        return doc;
      },
      m);
}

json op_moore(const AnyMatrix& m, bool as_float) {
  return std::visit(
      [&](const auto& a) {
        json doc;
        doc["op"] = "moore";
        doc["value"] = value_json(moore(a), as_float);
        return doc;
      },
      m);
}

json op_study(const AnyMatrix& m, bool as_float) {
  return std::visit(
      [&](const auto& a) -> json {
        using S = typename std::decay_t<decltype(a)>::scalar_type;
        if constexpr (is_quaternion_v<S>) {
          json doc;
          doc["op"] = "study";
          doc["value"] = real_json(study(a), as_float);
          return doc;
        } else {
          throw ParseError("study requires a quaternion scalar kind");
        }
      },
      m);
}

json op_dieudonne(const AnyMatrix& m, bool as_float) {
  return std::visit(
      [&](const auto& a) {
        using S = typename std::decay_t<decltype(a)>::scalar_type;
        using RT = real_traits<typename scalar_traits<S>::real_type>;
        const auto sq = dieudonne_sq(a);
        json doc;
        doc["op"] = "dieudonne";
        doc["squared"] = real_json(sq, as_float);
        if (as_float) {
          const double v = RT::to_double(sq);
          doc["root"] = std::sqrt(v < 0 ? 0.0 : v);
        }
        return doc;
      },
      m);
}

json op_norm(const AnyMatrix& m, const std::string& method, bool as_float) {
  if (method != "moore" && method != "recursive")
    throw ParseError("unknown method \"" + method + "\"");
  return std::visit(
      [&](const auto& a) {
        json doc;
        doc["op"] = "norm";
        doc["method"] = method;
        doc["value"] =
            real_json(method == "moore" ? nu_via_moore(a) : nu_matrix(a), as_float);
        return doc;
      },
      m);
}

json op_predet(const AnyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols,
               bool as_float) {
  return std::visit(
      [&](const auto& a) {
        json doc;
        doc["op"] = "predet";
        doc["rows"] = rows;
        doc["cols"] = cols;
        doc["value"] = value_json(predet(a, rows, cols), as_float);
        return doc;
      },
      m);
}

json op_permanent(const AnyMatrix& m, int row, int col, int cap, bool as_float) {
  return std::visit(
      [&](const auto& a) {
        json doc;
        doc["op"] = "permanent";
        doc["row"] = row;
        doc["col"] = col;
        doc["value"] = value_json(double_permanent(a, row, col, cap), as_float);
        return doc;
      },
      m);
}

json op_expand(int n, int row, int col, int cap) {
  json doc;
  doc["op"] = "expand";
  doc["n"] = n;
  doc["row"] = row;
  doc["col"] = col;
  auto terms = json::array();
  for (const ExpansionTerm& t : enumerate_paths(n, row, col, cap))
    terms.push_back(render_term(t, n));
  doc["count"] = terms.size();
  doc["terms"] = std::move(terms);
  return doc;
}

json op_verify(const VerifyConfig& cfg) {
  const auto reports = run_verify(cfg);
  json doc;
  doc["op"] = "verify";
  bool ok = true;
  auto arr = json::array();
  for (const RunReport& r : reports) {
    json jr;
    jr["suite"] = r.suite;
    jr["trials"] = r.trials;
    jr["passes"] = r.passes;
    jr["skips"] = r.skips;
    auto fl = json::array();
    for (const FailureRecord& f : r.failures) {
      json jf;
      jf["trial"] = f.trial;
      jf["seed"] = f.seed;
      jf["message"] = f.message;
      if (!f.matrix.empty()) jf["matrix"] = json::parse(f.matrix);
      fl.push_back(std::move(jf));
    }
    jr["failures"] = std::move(fl);
    jr["wall_ms"] = r.wall_ms;
    ok = ok && r.ok();
    arr.push_back(std::move(jr));
  }
  doc["reports"] = std::move(arr);
  doc["ok"] = ok;
  return doc;
}

}  // namespace ncdet
