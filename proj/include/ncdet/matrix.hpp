#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ncdet/quaternion.hpp"
#include "ncdet/scalar.hpp"

namespace ncdet {

/// A pair of label sets selecting a square submatrix.
struct SubmatrixSpec {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Dense square matrix whose rows and columns carry persistent 1-based labels.
/// Deleting rows/columns keeps the surviving ancestors' labels, so entries of
/// nested submatrices are always addressed by their original indices. The 0x0
/// matrix is a legitimate value.
template <ScalarKind S>
class LabeledMatrix {
 public:
  using scalar_type = S;

  LabeledMatrix() = default;

  LabeledMatrix(std::vector<int> row_labels, std::vector<int> col_labels,
                std::vector<S> entries)
      : rows_(std::move(row_labels)), cols_(std::move(col_labels)), e_(std::move(entries)) {
    if (rows_.size() != cols_.size() || e_.size() != rows_.size() * cols_.size())
      throw DimensionMismatch("labels/entries shape mismatch");
  }

  /// Builds an n x n matrix with fresh labels 1..n from row-major entries.
  static LabeledMatrix fresh(int n, std::vector<S> entries) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    return LabeledMatrix(labels, labels, std::move(entries));
  }

  static LabeledMatrix identity(int n) {
    std::vector<S> e(static_cast<std::size_t>(n) * n, scalar_zero<S>());
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = scalar_one<S>();
    return fresh(n, std::move(e));
  }

  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row_labels() const { return rows_; }
  const std::vector<int>& col_labels() const { return cols_; }

  const S& at_pos(int r, int c) const { return e_[static_cast<std::size_t>(r) * n() + c]; }
  S& at_pos(int r, int c) { return e_[static_cast<std::size_t>(r) * n() + c]; }

  int row_pos(int label) const {
    for (int r = 0; r < n(); ++r)
      if (rows_[r] == label) return r;
    throw UnknownLabel(label);
  }
  int col_pos(int label) const {
    for (int c = 0; c < n(); ++c)
      if (cols_[c] == label) return c;
    throw UnknownLabel(label);
  }

  /// Entry addressed by original labels.
  const S& at(int row_label, int col_label) const {
    return at_pos(row_pos(row_label), col_pos(col_label));
  }

  /// Deletes the given row and column labels; |rows| must equal |cols|.
  LabeledMatrix delete_rc(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size())
      throw DimensionMismatch("delete_rc needs equally many rows and columns");
    for (int lb : rows) (void)row_pos(lb);
    for (int lb : cols) (void)col_pos(lb);
    std::vector<int> keep_r, keep_c;
    for (int lb : rows_)
      if (std::find(rows.begin(), rows.end(), lb) == rows.end()) keep_r.push_back(lb);
    for (int lb : cols_)
      if (std::find(cols.begin(), cols.end(), lb) == cols.end()) keep_c.push_back(lb);
    return submatrix(keep_r, keep_c);
  }

  /// Restriction to the given labels, in the order listed.
  LabeledMatrix submatrix(const std::vector<int>& keep_rows,
                          const std::vector<int>& keep_cols) const {
    if (keep_rows.size() != keep_cols.size())
      throw DimensionMismatch("submatrix must stay square");
    std::vector<S> e;
    e.reserve(keep_rows.size() * keep_cols.size());
    for (int rl : keep_rows) {
      const int r = row_pos(rl);
      for (int cl : keep_cols) e.push_back(at_pos(r, col_pos(cl)));
    }
    return LabeledMatrix(keep_rows, keep_cols, std::move(e));
  }

  /// B^c: what remains of this matrix after removing the rows and columns of B.
  LabeledMatrix complement(const SubmatrixSpec& b) const { return delete_rc(b.rows, b.cols); }

  /// Conjugate transpose; (A*)* = A.
  LabeledMatrix hermitian_dual() const {
    std::vector<S> e;
    e.reserve(e_.size());
    for (int r = 0; r < n(); ++r)
      for (int c = 0; c < n(); ++c) e.push_back(conj(at_pos(c, r)));
    return LabeledMatrix(cols_, rows_, std::move(e));
  }

  /// A = A*; forces a real diagonal.
  bool is_hermitian() const {
    const LabeledMatrix dual = hermitian_dual();
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] == dual.e_[i])) return false;
    return true;
  }

  friend LabeledMatrix matmul(const LabeledMatrix& x, const LabeledMatrix& y) {
    if (x.n() != y.n()) throw DimensionMismatch("matmul needs equal orders");
    const int m = x.n();
    std::vector<S> e(static_cast<std::size_t>(m) * m, scalar_zero<S>());
    for (int r = 0; r < m; ++r)
      for (int k = 0; k < m; ++k) {
        const S& xrk = x.at_pos(r, k);
        if (is_zero(xrk)) continue;
        for (int c = 0; c < m; ++c)
          e[static_cast<std::size_t>(r) * m + c] =
              e[static_cast<std::size_t>(r) * m + c] + xrk * y.at_pos(k, c);
      }
    return LabeledMatrix(x.rows_, y.cols_, std::move(e));
  }

  /// Multiplies row i (by label) by lambda from the left.
  LabeledMatrix row_scale(int row_label, const S& lambda) const {
    LabeledMatrix out = *this;
    const int r = row_pos(row_label);
    for (int c = 0; c < n(); ++c) out.at_pos(r, c) = lambda * at_pos(r, c);
    return out;
  }

  /// Multiplies column j (by label) by mu from the right.
  LabeledMatrix col_scale(int col_label, const S& mu) const {
    LabeledMatrix out = *this;
    const int c = col_pos(col_label);
    for (int r = 0; r < n(); ++r) out.at_pos(r, c) = at_pos(r, c) * mu;
    return out;
  }

  /// Adds lambda * (row k) to row p, lambda acting from the left.
  LabeledMatrix row_add(int p_label, int k_label, const S& lambda) const {
    LabeledMatrix out = *this;
    const int p = row_pos(p_label), k = row_pos(k_label);
    for (int c = 0; c < n(); ++c) out.at_pos(p, c) = at_pos(p, c) + lambda * at_pos(k, c);
    return out;
  }

  /// Adds (column l) * lambda to column q, lambda acting from the right.
  LabeledMatrix col_add(int q_label, int l_label, const S& lambda) const {
    LabeledMatrix out = *this;
    const int q = col_pos(q_label), l = col_pos(l_label);
    for (int r = 0; r < n(); ++r) out.at_pos(r, q) = at_pos(r, q) + at_pos(r, l) * lambda;
    return out;
  }

  /// Rearranges row contents: new row at position t is the old row at
  /// position perm[t]. Labels stay in place, so this models permuting the
  /// rows of the underlying array.
  LabeledMatrix permute_rows(const std::vector<int>& perm) const {
    LabeledMatrix out = *this;
    for (int r = 0; r < n(); ++r)
      for (int c = 0; c < n(); ++c) out.at_pos(r, c) = at_pos(perm[r], c);
    return out;
  }

  LabeledMatrix permute_cols(const std::vector<int>& perm) const {
    LabeledMatrix out = *this;
    for (int r = 0; r < n(); ++r)
      for (int c = 0; c < n(); ++c) out.at_pos(r, c) = at_pos(r, perm[c]);
    return out;
  }

  friend bool operator==(const LabeledMatrix& x, const LabeledMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

  bool entries_equal(const LabeledMatrix& other, const Tolerance& tol = {}) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!scalar_eq(e_[i], other.e_[i], tol)) return false;
    return true;
  }

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<S> e_;
};

}  // namespace ncdet
