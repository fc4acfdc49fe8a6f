#pragma once

#include <string>
#include <vector>

#include "ncdet/io.hpp"
#include "ncdet/verify.hpp"

namespace ncdet {

// JSON views of the public operations, shared by the command line tool and the
// python module. Exact scalar kinds render as rational strings unless as_float
// is set; the f64 kind always renders as numbers. Failures surface as the
// exceptions from errors.hpp, except an undefined quasideterminant, which is a
// regular outcome reported in the document itself.

/// Operation cap for the expansion family; NCDET_MAX_N overrides the default 6.
int default_cap();

nlohmann::ordered_json op_quasidet(const AnyMatrix& m, int row, int col, bool as_float);
nlohmann::ordered_json op_moore(const AnyMatrix& m, bool as_float);
nlohmann::ordered_json op_study(const AnyMatrix& m, bool as_float);
nlohmann::ordered_json op_dieudonne(const AnyMatrix& m, bool as_float);
nlohmann::ordered_json op_norm(const AnyMatrix& m, const std::string& method, bool as_float);
nlohmann::ordered_json op_predet(const AnyMatrix& m, const std::vector<int>& rows,
                                 const std::vector<int>& cols, bool as_float);
nlohmann::ordered_json op_permanent(const AnyMatrix& m, int row, int col, int cap, bool as_float);
nlohmann::ordered_json op_expand(int n, int row, int col, int cap);
nlohmann::ordered_json op_verify(const VerifyConfig& cfg);

}  // namespace ncdet
