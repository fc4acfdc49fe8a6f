#include "doctest.h"
#include "ncdet/matrix.hpp"

using namespace ncdet;

namespace {
using QR = QuaternionRational;
using M = LabeledMatrix<QR>;

QR q(long a, long b, long c, long d) {
  return QR(Rational(a), Rational(b), Rational(c), Rational(d));
}
const QR one = QR::one(), i = QR::unit_i(), j = QR::unit_j(), k = QR::unit_k();
}  // namespace

TEST_CASE("construction and label addressing") {
  const M a = M::fresh(2, {q(1, 0, 0, 0), q(2, 0, 0, 0), q(3, 0, 0, 0), q(4, 0, 0, 0)});
  CHECK(a.n() == 2);
  CHECK(a.row_labels() == std::vector<int>{1, 2});
  CHECK(a.at(1, 2) == q(2, 0, 0, 0));
  CHECK(a.at_pos(1, 0) == q(3, 0, 0, 0));
  CHECK_THROWS_AS((void)a.at(3, 1), UnknownLabel);
  CHECK_THROWS_AS(M({1, 2}, {1, 2}, {one}), DimensionMismatch);
  CHECK(M::identity(3).at(2, 2) == one);
  CHECK(M::identity(3).at(2, 3) == QR::zero());
}

TEST_CASE("delete_rc keeps labels") {
  const M a = M::fresh(3, {q(1, 0, 0, 0), q(2, 0, 0, 0), q(3, 0, 0, 0),
                           q(4, 0, 0, 0), q(5, 0, 0, 0), q(6, 0, 0, 0),
                           q(7, 0, 0, 0), q(8, 0, 0, 0), q(9, 0, 0, 0)});
  const M b = a.delete_rc({2}, {1});
  CHECK(b.n() == 2);
  CHECK(b.row_labels() == std::vector<int>{1, 3});
  CHECK(b.col_labels() == std::vector<int>{2, 3});
  CHECK(b.at(1, 2) == q(2, 0, 0, 0));
  CHECK(b.at(3, 3) == q(9, 0, 0, 0));
  CHECK_THROWS_AS(a.delete_rc({1, 2}, {1}), DimensionMismatch);
  CHECK_THROWS_AS(a.delete_rc({7}, {1}), UnknownLabel);
  const M c = a.complement(SubmatrixSpec{{1, 3}, {2, 3}});
  CHECK(c.n() == 1);
  CHECK(c.at(2, 1) == q(4, 0, 0, 0));
  const M s = a.submatrix({3, 1}, {2, 1});
  CHECK(s.row_labels() == std::vector<int>{3, 1});
  CHECK(s.at_pos(0, 0) == q(8, 0, 0, 0));
}

TEST_CASE("hermitian dual and predicate") {
  const M a = M::fresh(2, {i, one + j, QR::zero(), k});
  const M d = a.hermitian_dual();
  CHECK(d.at(1, 1) == -i);
  CHECK(d.at(1, 2) == QR::zero());
  CHECK(d.at(2, 1) == one - j);
  CHECK(d.at(2, 2) == -k);
  CHECK(!a.is_hermitian());
  const M h = M::fresh(2, {q(2, 0, 0, 0), q(0, 1, 2, 3), q(0, -1, -2, -3), q(5, 0, 0, 0)});
  CHECK(h.is_hermitian());
  CHECK(h.hermitian_dual() == h);
}

TEST_CASE("matmul respects labels and order") {
  const M a = M::fresh(2, {i, j, k, one});
  const M id = M::identity(2);
  CHECK(matmul(a, id) == a);
  CHECK(matmul(id, a) == a);
  const M b = M::fresh(2, {j, QR::zero(), QR::zero(), k});
  const M ab = matmul(a, b);
  CHECK(ab.at(1, 1) == i * j);
  CHECK(ab.at(1, 2) == j * k);
  CHECK(ab.at(2, 1) == k * j);
  CHECK(ab.at(2, 2) == one * k);
}

TEST_CASE("row and column operations") {
  const M a = M::fresh(2, {i, j, k, one});
  const M rs = a.row_scale(1, j);
  CHECK(rs.at(1, 1) == j * i);
  CHECK(rs.at(1, 2) == j * j);
  CHECK(rs.at(2, 1) == k);
  const M cs = a.col_scale(2, j);
  CHECK(cs.at(1, 2) == j * j);
  CHECK(cs.at(2, 2) == one * j);
  CHECK(cs.at(1, 1) == i);
  const M ra = a.row_add(1, 2, j);
  CHECK(ra.at(1, 1) == i + j * k);
  CHECK(ra.at(1, 2) == j + j * one);
  CHECK(ra.at(2, 1) == k);
  const M ca = a.col_add(2, 1, k);
  CHECK(ca.at(1, 2) == j + i * k);
  CHECK(ca.at(2, 2) == one + k * k);
  CHECK(ca.at(1, 1) == i);
}

TEST_CASE("permutations move contents, labels stay put") {
  const M a = M::fresh(2, {q(1, 0, 0, 0), q(2, 0, 0, 0), q(3, 0, 0, 0), q(4, 0, 0, 0)});
  const M p = a.permute_rows({1, 0});
  CHECK(p.row_labels() == std::vector<int>{1, 2});
  CHECK(p.at_pos(0, 0) == q(3, 0, 0, 0));
  CHECK(p.at_pos(1, 1) == q(2, 0, 0, 0));
  const M c = a.permute_cols({1, 0});
  CHECK(c.at_pos(0, 0) == q(2, 0, 0, 0));
}
