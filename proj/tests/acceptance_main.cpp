// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncdet/permanents.hpp"
#include "ncdet/random.hpp"
#include "ncdet/verify.hpp"

using namespace ncdet;

namespace {

struct Criterion {
  std::string label;
  bool pass = true;
  std::vector<std::string> notes;
  double ms = 0.0;
};

void fail(Criterion& c, const std::string& note) {
  c.pass = false;
  c.notes.push_back(note);
}

RunReport suite_run(const std::string& suite, ScalarTag scalar, int n, int trials) {
  VerifyConfig cfg;
  cfg.suite = suite;
  cfg.n = n;
  cfg.trials = trials;
  cfg.scalar = scalar;
  return run_verify(cfg).front();
}

void absorb(Criterion& c, const RunReport& r, const std::string& what) {
  c.ms += r.wall_ms;
  if (!r.ok())
    fail(c, what + ": " + r.failures.front().message);
  else if (r.passes == 0)
    fail(c, what + ": every trial was skipped");
}

void budget(Criterion& c, double limit_ms) {
  if (c.ms > limit_ms)
    fail(c, "exceeded the " + std::to_string(static_cast<int>(limit_ms / 1000)) + " s budget");
}

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(NCDET_SOURCE_DIR) + "/" + rel);
  std::ostringstream out;
  out << in.rdbuf();
  return in.good() ? out.str() : std::string("<unreadable: " + rel + ">");
}

void match_golden(Criterion& c, const std::string& got, const std::string& rel) {
  if (got != slurp(rel)) fail(c, "rendering differs from " + rel);
}

template <ScalarKind S>
void oracle_agreement(Criterion& c, int n, int trials, const Tolerance& tol) {
  int checked = 0;
  for (int t = 0; t < trials; ++t) {
    LabeledMatrix<S> a;
    try {
      a = random_generic_matrix<S>(42 + static_cast<unsigned long long>(t), n);
    } catch (const DegenerateStream&) {
      continue;
    }
    for (int i : a.row_labels())
      for (int j : a.col_labels()) {
        const auto rec = quasidet_recursive(a, i, j);
        if (!rec.defined) continue;
        const auto blk = quasidet_block(a, i, j);
        if (!blk.defined || !scalar_eq(blk.value, rec.value, tol)) {
          fail(c, "oracle disagreement at order " + std::to_string(n) + ", trial " +
                      std::to_string(t));
          return;
        }
        ++checked;
      }
  }
  if (checked == 0) fail(c, "oracle comparison never ran at order " + std::to_string(n));
}

void udl_product(Criterion& c, int n, int trials) {
  using S = QuaternionRational;
  int checked = 0;
  for (int t = 0; t < trials; ++t) {
    LabeledMatrix<S> a;
    try {
      a = random_generic_matrix<S>(42 + static_cast<unsigned long long>(t), n);
    } catch (const DegenerateStream&) {
      continue;
    }
    UDLFactors<S> f;
    try {
      f = gauss_udl(a);
    } catch (const SingularMatrix&) {
      continue;
    }
    if (!(matmul(matmul(f.U, f.D), f.L) == a)) {
      fail(c, "U D L does not reconstruct the sample at order " + std::to_string(n));
      return;
    }
    S prod = scalar_one<S>();
    for (int p = 0; p < n; ++p) prod = prod * f.D.at_pos(p, p);
    if (!(prod == delta(a))) {
      fail(c, "diagonal product differs from the basic predeterminant at order " +
                  std::to_string(n));
      return;
    }
    ++checked;
  }
  if (checked == 0) fail(c, "no usable sample at order " + std::to_string(n));
}

}  // namespace

int main() {
  const ScalarTag QR = ScalarTag::RationalQuaternion;
  const ScalarTag QF = ScalarTag::F64Quaternion;
  std::vector<Criterion> gates(11);
  const auto clock_ms = [] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };

  {
    Criterion& c = gates[0];
    c.label = "norm-weighted expansion identity, exact quaternions, orders 2..4, 100 trials each";
    for (int n : {2, 3, 4})
      absorb(c, suite_run("expansion", QR, n, 100), "order " + std::to_string(n));
    budget(c, 60000);
  }
  {
    Criterion& c = gates[1];
    c.label = "symbolic expansion and permanent renderings match the golden files";
    const double t0 = clock_ms();
    match_golden(c, render_permanent(2, 1, 1), "tests/golden/pi11_n2.txt");
    match_golden(c, render_permanent(3, 1, 1), "tests/golden/pi11_n3.txt");
    match_golden(c, render_expansion(2, 1, 1), "tests/golden/expand_n2_11.txt");
    match_golden(c, render_expansion(3, 1, 1), "tests/golden/expand_n3_11.txt");
    c.ms = clock_ms() - t0;
  }
  {
    Criterion& c = gates[2];
    c.label = "moore determinant real and equal to the predeterminant on hermitian samples, orders 2..4";
    for (int n : {2, 3, 4})
      absorb(c, suite_run("moore", QR, n, 100), "order " + std::to_string(n));
  }
  {
    Criterion& c = gates[3];
    c.label = "study determinant equals the total norm, orders 1..3, 50 trials each";
    for (int n : {1, 2, 3})
      absorb(c, suite_run("study", QR, n, 50), "order " + std::to_string(n));
    budget(c, 30000);
  }
  {
    Criterion& c = gates[4];
    c.label = "norm multiplicativity and dual identities, orders 2 and 3, 50 pairs each";
    for (int n : {2, 3})
      absorb(c, suite_run("norm", QR, n, 50), "order " + std::to_string(n));
  }
  {
    Criterion& c = gates[5];
    c.label = "predeterminant ordering independence and hermitian parity, order 3";
    absorb(c, suite_run("predet", QR, 3, 100), "order 3");
  }
  {
    Criterion& c = gates[6];
    c.label = "gauss factorization reconstructs and multiplies out, orders 2..4, 100 trials each";
    const double t0 = clock_ms();
    for (int n : {2, 3, 4}) udl_product(c, n, 100);
    c.ms = clock_ms() - t0;
  }
  {
    Criterion& c = gates[7];
    c.label = "structural laws and oracle agreement, orders 3 and 4, 100 trials each";
    for (int n : {3, 4}) {
      for (const char* s : {"homology", "heredity", "sylvester", "rowcol"})
        absorb(c, suite_run(s, QR, n, 100), std::string(s) + " at order " + std::to_string(n));
      const double t0 = clock_ms();
      oracle_agreement<QuaternionRational>(c, n, 100, Tolerance{});
      c.ms += clock_ms() - t0;
    }
  }
  {
    Criterion& c = gates[8];
    c.label = "commutative reduction to classical determinant ratios, orders 2..4, 100 trials each";
    for (int n : {2, 3, 4})
      absorb(c, suite_run("commutative", ScalarTag::RationalComplex, n, 100),
             "order " + std::to_string(n));
  }
  {
    Criterion& c = gates[9];
    c.label = "monomial census";
    absorb(c, suite_run("census", QR, 3, 1), "census");
  }
  {
    Criterion& c = gates[10];
    c.label = "float path: expansion, hermitian and structural suites at order 3";
    absorb(c, suite_run("expansion", QF, 3, 100), "expansion");
    absorb(c, suite_run("moore", QF, 3, 100), "moore");
    for (const char* s : {"homology", "heredity", "sylvester", "rowcol"})
      absorb(c, suite_run(s, QF, 3, 100), s);
    const double t0 = clock_ms();
    oracle_agreement<QuaternionF64>(c, 3, 100, Tolerance{});
    c.ms += clock_ms() - t0;
  }

  int passed = 0;
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Criterion& c = gates[g];
    std::printf("[%2zu/11] %s  %s (%.0f ms)\n", g + 1, c.pass ? "PASS" : "FAIL", c.label.c_str(),
                c.ms);
    for (const std::string& note : c.notes) std::printf("        - %s\n", note.c_str());
    if (c.pass) ++passed;
  }
  std::printf("acceptance: %d/11 criteria passed\n", passed);
  return passed == 11 ? 0 : 1;
}
