#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ncdet/permanents.hpp"

using namespace ncdet;

namespace {
std::string slurp(const std::string& rel) {
  const std::string path = std::string(NCDET_SOURCE_DIR) + "/tests/golden/" + rel;
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}
}  // namespace

TEST_CASE("symbolic expansion matches the frozen displays") {
  CHECK(render_expansion(2, 1, 1) == slurp("expand_n2_11.txt"));
  CHECK(render_expansion(3, 1, 1) == slurp("expand_n3_11.txt"));
}

TEST_CASE("full-order permanent words match the frozen displays") {
  CHECK(render_permanent(2, 1, 1) == slurp("pi11_n2.txt"));
  CHECK(render_permanent(3, 1, 1) == slurp("pi11_n3.txt"));
}
