#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncdet/ops.hpp"
#include "ncdet/permanents.hpp"

namespace py = pybind11;
using namespace ncdet;

namespace {

// Results cross the boundary as canonical JSON text; the python package parses
// them into plain dicts. This keeps exact rational values lossless.
std::string dumps(const nlohmann::ordered_json& doc) { return doc.dump(); }

AnyMatrix parse(const std::string& text) { return parse_matrix_text(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quasideterminants and determinants over noncommutative scalars";
#ifdef NCDET_VERSION
  m.attr("__version__") = NCDET_VERSION;
#else
  m.attr("__version__") = "0.0.0";
#endif

  // Base first so the more specific translators below win.
  static py::exception<Error> exc_base(m, "NcdetError");
  static py::exception<ParseError> exc_parse(m, "InputError", exc_base.ptr());
  static py::exception<CapExceeded> exc_cap(m, "CapError", exc_base.ptr());
  static py::exception<UndefinedResult> exc_undef(m, "UndefinedError", exc_base.ptr());
  static py::exception<SingularMatrix> exc_sing(m, "SingularError", exc_base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    if (!p) return;
    try {
      std::rethrow_exception(p);
    } catch (const ParseError& e) {
      exc_parse(e.what());
    } catch (const CapExceeded& e) {
      exc_cap(e.what());
    } catch (const UndefinedResult& e) {
      exc_undef(e.what());
    } catch (const SingularMatrix& e) {
      exc_sing(e.what());
    } catch (const Error& e) {
      exc_base(e.what());
    }
  });

  m.def(
      "quasidet",
      [](const std::string& text, int row, int col, bool as_float) {
        return dumps(op_quasidet(parse(text), row, col, as_float));
      },
      py::arg("matrix"), py::arg("row"), py::arg("col"), py::arg("as_float") = false);
  m.def(
      "moore",
      [](const std::string& text, bool as_float) { return dumps(op_moore(parse(text), as_float)); },
      py::arg("matrix"), py::arg("as_float") = false);
  m.def(
      "study",
      [](const std::string& text, bool as_float) { return dumps(op_study(parse(text), as_float)); },
      py::arg("matrix"), py::arg("as_float") = false);
  m.def(
      "dieudonne",
      [](const std::string& text, bool as_float) {
        return dumps(op_dieudonne(parse(text), as_float));
      },
      py::arg("matrix"), py::arg("as_float") = false);
  m.def(
      "norm",
      [](const std::string& text, const std::string& method, bool as_float) {
        return dumps(op_norm(parse(text), method, as_float));
      },
      py::arg("matrix"), py::arg("method") = "moore", py::arg("as_float") = false);
  m.def(
      "predet",
      [](const std::string& text, const std::vector<int>& rows, const std::vector<int>& cols,
         bool as_float) { return dumps(op_predet(parse(text), rows, cols, as_float)); },
      py::arg("matrix"), py::arg("rows"), py::arg("cols"), py::arg("as_float") = false);
  m.def(
      "permanent",
      [](const std::string& text, int row, int col, int cap, bool as_float) {
        return dumps(op_permanent(parse(text), row, col, cap, as_float));
      },
      py::arg("matrix"), py::arg("row"), py::arg("col"), py::arg("cap") = 6,
      py::arg("as_float") = false);
  m.def(
      "expand",
      [](int n, int row, int col, int cap) { return dumps(op_expand(n, row, col, cap)); },
      py::arg("n"), py::arg("row"), py::arg("col"), py::arg("cap") = 6);
  m.def(
      "verify",
      [](const std::string& suite, int n, int trials, unsigned long long seed,
         const std::string& scalar) {
        VerifyConfig cfg;
        cfg.suite = suite;
        cfg.n = n;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.scalar = tag_from_name(scalar);
        return dumps(op_verify(cfg));
      },
      py::arg("suite") = "all", py::arg("n") = 3, py::arg("trials") = 100, py::arg("seed") = 42,
      py::arg("scalar") = "rational-quaternion");
  m.def(
      "mu_count", [](int n) { return mu_count(n).get_str(); }, py::arg("n"));
  m.def("canonical_matrix",
        [](const std::string& text) { return dump_matrix(parse(text)); });
}
