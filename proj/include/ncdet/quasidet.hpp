#pragma once

#include <utility>
#include <vector>

#include "ncdet/matrix.hpp"

namespace ncdet {

/// Matrix inverse over a division scalar kind. Gaussian elimination with row
/// pivoting; every update multiplies rows from the left, so factor order is
/// safe for noncommutative scalars.
template <ScalarKind S>
LabeledMatrix<S> invert(const LabeledMatrix<S>& a) {
  const int m = a.n();
  // Augmented [A | I] stored as two position-indexed grids; the identity half
  // reuses a's labels so positions line up.
  LabeledMatrix<S> work = a;
  LabeledMatrix<S> right(a.row_labels(), a.col_labels(), [&] {
    std::vector<S> e(static_cast<std::size_t>(m) * m, scalar_zero<S>());
    for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i) * m + i] = scalar_one<S>();
    return e;
  }());

  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (!is_zero(work.at_pos(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMatrix();
    if (piv != col)
      for (int c = 0; c < m; ++c) {
        std::swap(work.at_pos(piv, c), work.at_pos(col, c));
        std::swap(right.at_pos(piv, c), right.at_pos(col, c));
      }
    const S pinv = inv(work.at_pos(col, col));
    for (int c = 0; c < m; ++c) {
      work.at_pos(col, c) = pinv * work.at_pos(col, c);
      right.at_pos(col, c) = pinv * right.at_pos(col, c);
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const S f = work.at_pos(r, col);
      if (is_zero(f)) continue;
      for (int c = 0; c < m; ++c) {
        work.at_pos(r, c) = work.at_pos(r, c) - f * work.at_pos(col, c);
        right.at_pos(r, c) = right.at_pos(r, c) - f * right.at_pos(col, c);
      }
    }
  }
  // Inverse swaps the label roles: rows of A^{-1} answer to A's columns.
  return LabeledMatrix<S>(a.col_labels(), a.row_labels(), [&] {
    std::vector<S> e;
    e.reserve(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) e.push_back(right.at_pos(r, c));
    return e;
  }());
}

template <ScalarKind S>
struct QuasidetResult {
  S value = scalar_zero<S>();
  int row = 0;
  int col = 0;
  bool defined = false;
};

/// |A|_{ij} = a_{ij} - r_i^j (A^{ij})^{-1} c_j^i, with the row/column vectors
/// ordered by ascending surviving labels. Undefined when A^{ij} is singular.
template <ScalarKind S>
QuasidetResult<S> quasidet_block(const LabeledMatrix<S>& a, int i, int j) {
  QuasidetResult<S> out;
  out.row = i;
  out.col = j;
  const S aij = a.at(i, j);
  if (a.n() == 1) {
    out.value = aij;
    out.defined = true;
    return out;
  }
  const LabeledMatrix<S> sub = a.delete_rc({i}, {j});
  LabeledMatrix<S> subinv;
  try {
    subinv = invert(sub);
  } catch (const SingularMatrix&) {
    return out;
  }
  S acc = scalar_zero<S>();
  for (int rl : sub.row_labels())
    for (int cl : sub.col_labels()) acc = acc + a.at(i, cl) * subinv.at(cl, rl) * a.at(rl, j);
  out.value = aij - acc;
  out.defined = true;
  return out;
}

/// Value-or-throw wrapper around quasidet_block.
template <ScalarKind S>
S quasidet_value(const LabeledMatrix<S>& a, int i, int j) {
  const auto r = quasidet_block(a, i, j);
  if (!r.defined) throw UndefinedResult("undefined: A^{ij} not invertible");
  return r.value;
}

/// Recursive expansion |A|_{ij} = a_{ij} - sum over p!=i, q!=j of
/// a_{iq} (|A^{ij}|_{pq})^{-1} a_{pj}. Demands every inner quasideterminant
/// defined and nonzero, a strictly smaller domain than the block form; used
/// as an independent oracle.
template <ScalarKind S>
QuasidetResult<S> quasidet_recursive(const LabeledMatrix<S>& a, int i, int j) {
  QuasidetResult<S> out;
  out.row = i;
  out.col = j;
  if (a.n() == 1) {
    out.value = a.at(i, j);
    out.defined = true;
    return out;
  }
  const LabeledMatrix<S> sub = a.delete_rc({i}, {j});
  S acc = scalar_zero<S>();
  for (int p : sub.row_labels())
    for (int q : sub.col_labels()) {
      const auto inner = quasidet_recursive(sub, p, q);
      if (!inner.defined || is_zero(inner.value)) return out;
      acc = acc + a.at(i, q) * inv(inner.value) * a.at(p, j);
    }
  out.value = a.at(i, j) - acc;
  out.defined = true;
  return out;
}

/// Sylvester compression: replace A by the matrix B of quasiminors of the
/// pivot block bordered by one surviving row and column. Quasideterminants
/// of B at surviving positions equal those of A.
template <ScalarKind S>
LabeledMatrix<S> sylvester_compress(const LabeledMatrix<S>& a, const SubmatrixSpec& pivot) {
  for (int lb : pivot.rows) (void)a.row_pos(lb);
  for (int lb : pivot.cols) (void)a.col_pos(lb);
  if (pivot.rows.size() != pivot.cols.size())
    throw DimensionMismatch("pivot block must be square");
  std::vector<int> rest_r, rest_c;
  for (int lb : a.row_labels())
    if (std::find(pivot.rows.begin(), pivot.rows.end(), lb) == pivot.rows.end())
      rest_r.push_back(lb);
  for (int lb : a.col_labels())
    if (std::find(pivot.cols.begin(), pivot.cols.end(), lb) == pivot.cols.end())
      rest_c.push_back(lb);
  if (pivot.rows.empty()) return a.submatrix(rest_r, rest_c);

  std::vector<S> entries;
  entries.reserve(rest_r.size() * rest_c.size());
  for (int p : rest_r)
    for (int q : rest_c) {
      std::vector<int> br = pivot.rows, bc = pivot.cols;
      br.push_back(p);
      bc.push_back(q);
      const LabeledMatrix<S> bordered = a.submatrix(br, bc);
      entries.push_back(quasidet_value(bordered, p, q));
    }
  return LabeledMatrix<S>(rest_r, rest_c, std::move(entries));
}

enum class CheckStatus { Holds, Fails, Skipped };

/// Homological relations. Row relation (a) uses (i, j, l, s):
///   -|A|_{ij} (|A^{il}|_{sj})^{-1} = |A|_{il} (|A^{ij}|_{sl})^{-1}
/// column relation (b) uses (i, j, k, t):
///   -(|A^{kj}|_{it})^{-1} |A|_{ij} = (|A^{ij}|_{kt})^{-1} |A|_{kj}
/// A relation whose subexpressions are undefined or non-invertible is
/// Skipped rather than failed.
template <ScalarKind S>
std::pair<CheckStatus, CheckStatus> check_homological(const LabeledMatrix<S>& a, int i, int j,
                                                      int l, int s, int k, int t,
                                                      const Tolerance& tol = {}) {
  auto row_rel = [&]() -> CheckStatus {
    if (s == i || l == j) return CheckStatus::Skipped;
    const auto qij = quasidet_block(a, i, j);
    const auto qil = quasidet_block(a, i, l);
    const auto m1 = quasidet_block(a.delete_rc({i}, {l}), s, j);
    const auto m2 = quasidet_block(a.delete_rc({i}, {j}), s, l);
    if (!qij.defined || !qil.defined || !m1.defined || !m2.defined) return CheckStatus::Skipped;
    if (is_zero(m1.value) || is_zero(m2.value)) return CheckStatus::Skipped;
    const S lhs = -(qij.value * inv(m1.value));
    const S rhs = qil.value * inv(m2.value);
    return scalar_eq(lhs, rhs, tol) ? CheckStatus::Holds : CheckStatus::Fails;
  };
  auto col_rel = [&]() -> CheckStatus {
    if (k == i || t == j) return CheckStatus::Skipped;
    const auto qij = quasidet_block(a, i, j);
    const auto qkj = quasidet_block(a, k, j);
    const auto m1 = quasidet_block(a.delete_rc({k}, {j}), i, t);
    const auto m2 = quasidet_block(a.delete_rc({i}, {j}), k, t);
    if (!qij.defined || !qkj.defined || !m1.defined || !m2.defined) return CheckStatus::Skipped;
    if (is_zero(m1.value) || is_zero(m2.value)) return CheckStatus::Skipped;
    const S lhs = -(inv(m1.value) * qij.value);
    const S rhs = inv(m2.value) * qkj.value;
    return scalar_eq(lhs, rhs, tol) ? CheckStatus::Holds : CheckStatus::Fails;
  };
  return {row_rel(), col_rel()};
}

/// Heredity: |A|_{ij} equals the (i,j) quasideterminant of the Schur-style
/// block A11 - A12 A22^{-1} A21, where A11 is the leading k x k block (by
/// label order) and i, j lie inside it.
template <ScalarKind S>
bool check_heredity(const LabeledMatrix<S>& a, int k, int i, int j, const Tolerance& tol = {}) {
  const int n = a.n();
  if (k < 1 || k > n) throw DimensionMismatch("block size out of range");
  std::vector<int> head_r(a.row_labels().begin(), a.row_labels().begin() + k);
  std::vector<int> head_c(a.col_labels().begin(), a.col_labels().begin() + k);
  std::vector<int> tail_r(a.row_labels().begin() + k, a.row_labels().end());
  std::vector<int> tail_c(a.col_labels().begin() + k, a.col_labels().end());

  LabeledMatrix<S> schur = a.submatrix(head_r, head_c);
  if (k < n) {
    const LabeledMatrix<S> a22inv = invert(a.submatrix(tail_r, tail_c));
    // A12 A22^{-1} A21, assembled entrywise to keep label bookkeeping plain.
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        S acc = scalar_zero<S>();
        for (int u : tail_c)
          for (int v : tail_r)
            acc = acc + a.at(head_r[r], u) * a22inv.at(u, v) * a.at(v, head_c[c]);
        schur.at_pos(r, c) = schur.at_pos(r, c) - acc;
      }
  }
  return scalar_eq(quasidet_value(a, i, j), quasidet_value(schur, i, j), tol);
}

}  // namespace ncdet
