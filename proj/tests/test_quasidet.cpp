#include <random>
#include <string>

#include "doctest.h"
#include "ncdet/quasidet.hpp"

using namespace ncdet;

namespace {
using QR = QuaternionRational;
using M = LabeledMatrix<QR>;

const QR one = QR::one(), i = QR::unit_i(), j = QR::unit_j(), k = QR::unit_k();

QR rnd_q(std::mt19937_64& g) {
  std::uniform_int_distribution<long> d(-6, 6);
  return QR(Rational(d(g)), Rational(d(g)), Rational(d(g)), Rational(d(g)));
}
}  // namespace

TEST_CASE("inverse over quaternions") {
  const M a = M::fresh(2, {i, QR::zero(), QR::zero(), j});
  const M b = invert(a);
  CHECK(b.at(1, 1) == -i);
  CHECK(b.at(2, 2) == -j);
  CHECK(matmul(a, b) == M::identity(2));
  CHECK(matmul(b, a) == M::identity(2));
  // Inverse rows answer to the original column labels.
  const M c({1, 2}, {1, 2}, {QR::zero(), i, j, QR::zero()});
  const M cinv = invert(c);
  CHECK(matmul(c, cinv) == M::identity(2));
  CHECK_THROWS_AS(invert(M::fresh(2, {one, one, one, one})), SingularMatrix);
}

TEST_CASE("two by two corner formulas") {
  const M a = M::fresh(2, {i, j, k, one});
  CHECK(quasidet_value(a, 1, 1) == i - j * inv(one) * k);
  CHECK(quasidet_value(a, 1, 2) == j - i * inv(k) * one);
  CHECK(quasidet_value(a, 2, 1) == k - one * inv(j) * i);
  CHECK(quasidet_value(a, 2, 2) == one - k * inv(i) * j);
  // ij = k makes the (1,1) entry cancel exactly: i - jk = i - i = 0.
  CHECK(quasidet_value(a, 1, 1) == QR::zero());
}

TEST_CASE("undefined when the complement is singular") {
  const M a = M::fresh(2, {i, j, k, QR::zero()});
  const auto r = quasidet_block(a, 1, 1);
  CHECK(!r.defined);
  try {
    (void)quasidet_value(a, 1, 1);
    CHECK(false);
  } catch (const UndefinedResult& e) {
    CHECK(std::string(e.what()) == "undefined: A^{ij} not invertible");
  }
  CHECK(quasidet_block(M::fresh(1, {QR::zero()}), 1, 1).defined);
}

TEST_CASE("block and recursive forms agree") {
  std::mt19937_64 g(7);
  for (int n : {2, 3}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<QR> e;
      for (int p = 0; p < n * n; ++p) e.push_back(rnd_q(g));
      const M a = M::fresh(n, std::move(e));
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
          const auto rec = quasidet_recursive(a, r, c);
          if (!rec.defined) continue;
          const auto blk = quasidet_block(a, r, c);
          REQUIRE(blk.defined);
          CHECK(blk.value == rec.value);
        }
    }
  }
}

TEST_CASE("sylvester compression preserves quasiminors") {
  std::mt19937_64 g(11);
  std::vector<QR> e;
  for (int p = 0; p < 16; ++p) e.push_back(rnd_q(g));
  const M a = M::fresh(4, std::move(e));
  const M b = sylvester_compress(a, SubmatrixSpec{{1, 2}, {1, 2}});
  CHECK(b.row_labels() == std::vector<int>{3, 4});
  CHECK(b.col_labels() == std::vector<int>{3, 4});
  for (int r : {3, 4})
    for (int c : {3, 4}) {
      const auto via_b = quasidet_block(b, r, c);
      const auto via_a = quasidet_block(a, r, c);
      REQUIRE(via_b.defined);
      REQUIRE(via_a.defined);
      CHECK(via_b.value == via_a.value);
    }
  CHECK(sylvester_compress(a, SubmatrixSpec{{}, {}}) == a);
  CHECK_THROWS_AS(sylvester_compress(a, SubmatrixSpec{{1}, {1, 2}}), DimensionMismatch);
  CHECK_THROWS_AS(sylvester_compress(a, SubmatrixSpec{{9}, {9}}), UnknownLabel);
}

TEST_CASE("homological relations on a generic sample") {
  std::mt19937_64 g(13);
  std::vector<QR> e;
  for (int p = 0; p < 9; ++p) e.push_back(rnd_q(g));
  const M a = M::fresh(3, std::move(e));
  int holds = 0;
  for (int l = 1; l <= 3; ++l)
    for (int s = 1; s <= 3; ++s) {
      const auto [row_rel, col_rel] = check_homological(a, 1, 1, l, s, s, l);
      CHECK(row_rel != CheckStatus::Fails);
      CHECK(col_rel != CheckStatus::Fails);
      if (row_rel == CheckStatus::Holds) ++holds;
    }
  CHECK(holds > 0);
  // Degenerate index choices are skips by definition.
  CHECK(check_homological(a, 1, 1, 1, 2, 2, 1).first == CheckStatus::Skipped);
  CHECK(check_homological(a, 1, 1, 2, 1, 1, 2).first == CheckStatus::Skipped);
}

TEST_CASE("heredity against the Schur block") {
  std::mt19937_64 g(17);
  for (int t = 0; t < 10; ++t) {
    std::vector<QR> e;
    for (int p = 0; p < 16; ++p) e.push_back(rnd_q(g));
    const M a = M::fresh(4, std::move(e));
    for (int kk = 1; kk <= 3; ++kk) {
      bool ok = true;
      try {
        ok = check_heredity(a, kk, 1, 1);
      } catch (const Error&) {
        continue;  // singular tail block or undefined quasiminor: not this test's concern
      }
      CHECK(ok);
    }
  }
  CHECK_THROWS_AS(check_heredity(M::identity(2), 5, 1, 1), DimensionMismatch);
}
