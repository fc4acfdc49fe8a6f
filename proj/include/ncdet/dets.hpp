#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ncdet/quasidet.hpp"

namespace ncdet {

/// An ordering of a label set, written as the sequence (i1,...,in).
using Ordering = std::vector<int>;

/// Parity of an ordering: sign of the permutation taking the sorted label
/// sequence to this one, computed by cycle counting.
inline int parity(const Ordering& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm(n);
  for (int t = 0; t < n; ++t) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), seq[t]);
    perm[t] = static_cast<int>(it - sorted.begin());
  }
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int t = 0; t < n; ++t) {
    if (seen[t]) continue;
    ++cycles;
    for (int u = t; !seen[u]; u = perm[u]) seen[u] = true;
  }
  return ((n - cycles) % 2 == 0) ? 1 : -1;
}

namespace detail {
inline void require_ordering_of(const Ordering& seq, const std::vector<int>& labels,
                                const char* which) {
  if (seq.size() != labels.size())
    throw DimensionMismatch(std::string(which) + " ordering has wrong length");
  Ordering a = seq, b = labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw DimensionMismatch(std::string(which) + " ordering is not a permutation of the labels");
}
}  // namespace detail

/// Predeterminant D_{I,J}(A): the left-to-right product of nested
/// quasideterminants |A|_{i1 j1} |A^{i1 j1}|_{i2 j2} ... a_{in jn}.
template <ScalarKind S>
S predet(const LabeledMatrix<S>& a, const Ordering& I, const Ordering& J) {
  detail::require_ordering_of(I, a.row_labels(), "row");
  detail::require_ordering_of(J, a.col_labels(), "column");
  LabeledMatrix<S> cur = a;
  S prod = scalar_one<S>();
  for (std::size_t k = 0; k < I.size(); ++k) {
    const auto q = quasidet_block(cur, I[k], J[k]);
    if (!q.defined)
      throw UndefinedResult("undefined: predeterminant factor " + std::to_string(k + 1) +
                            " at (" + std::to_string(I[k]) + "," + std::to_string(J[k]) + ")");
    prod = prod * q.value;
    cur = cur.delete_rc({I[k]}, {J[k]});
  }
  return prod;
}

/// Basic predeterminant: both orderings ascending.
template <ScalarKind S>
S delta(const LabeledMatrix<S>& a) {
  Ordering I = a.row_labels(), J = a.col_labels();
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  return predet(a, I, J);
}

template <ScalarKind S>
struct UDLFactors {
  LabeledMatrix<S> U, D, L;
};

/// Gauss decomposition A = U D L with U upper unitriangular, L lower
/// unitriangular and D = diag(y1,...,yn), where y_k is the (k,k)
/// quasideterminant of the trailing submatrix on positions k..n. Throws when
/// a trailing submatrix is singular or some y_k is zero.
template <ScalarKind S>
UDLFactors<S> gauss_udl(const LabeledMatrix<S>& a) {
  const int n = a.n();
  const std::vector<int>& rl = a.row_labels();
  const std::vector<int>& cl = a.col_labels();
  auto identity_on = [](const std::vector<int>& labels) {
    const int m = static_cast<int>(labels.size());
    std::vector<S> e(static_cast<std::size_t>(m) * m, scalar_zero<S>());
    for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i) * m + i] = scalar_one<S>();
    return LabeledMatrix<S>(labels, labels, std::move(e));
  };
  LabeledMatrix<S> U = identity_on(rl);
  LabeledMatrix<S> L = identity_on(cl);
  LabeledMatrix<S> D(rl, cl, std::vector<S>(static_cast<std::size_t>(n) * n, scalar_zero<S>()));

  for (int k = 0; k < n; ++k) {
    if (k == n - 1) {
      const S y = a.at_pos(k, k);
      if (is_zero(y)) throw SingularMatrix("leading structure is singular");
      D.at_pos(k, k) = y;
      break;
    }
    const std::vector<int> tr(rl.begin() + k + 1, rl.end());
    const std::vector<int> tc(cl.begin() + k + 1, cl.end());
    const LabeledMatrix<S> binv = invert(a.submatrix(tr, tc));
    const int m = static_cast<int>(tr.size());

    // u = r B^{-1} (indexed by B's rows), l = B^{-1} c (indexed by B's columns).
    std::vector<S> u(m, scalar_zero<S>()), l(m, scalar_zero<S>());
    for (int t = 0; t < m; ++t)
      for (int s = 0; s < m; ++s) {
        u[t] = u[t] + a.at(rl[k], tc[s]) * binv.at(tc[s], tr[t]);
        l[t] = l[t] + binv.at(tc[t], tr[s]) * a.at(tr[s], cl[k]);
      }
    S y = a.at_pos(k, k);
    for (int s = 0; s < m; ++s) y = y - a.at(rl[k], tc[s]) * l[s];
    if (is_zero(y)) throw SingularMatrix("leading structure is singular");
    D.at_pos(k, k) = y;

    LabeledMatrix<S> ek = identity_on(rl);
    LabeledMatrix<S> fk = identity_on(cl);
    for (int t = 0; t < m; ++t) {
      ek.at_pos(k, k + 1 + t) = u[t];
      fk.at_pos(k + 1 + t, k) = l[t];
    }
    U = matmul(U, ek);
    L = matmul(fk, L);
  }
  return {std::move(U), std::move(D), std::move(L)};
}

/// Dieudonne predeterminant: top-to-bottom product of D's diagonal.
template <ScalarKind S>
S dieudonne_pre(const LabeledMatrix<S>& a) {
  const UDLFactors<S> f = gauss_udl(a);
  S prod = scalar_one<S>();
  for (int k = 0; k < a.n(); ++k) prod = prod * f.D.at_pos(k, k);
  return prod;
}

/// Squared Dieudonne determinant nu(Delta(A)); exact for exact kinds. The
/// classical non-negative value is its square root.
template <ScalarKind S>
typename scalar_traits<S>::real_type dieudonne_sq(const LabeledMatrix<S>& a) {
  return nu(delta(a));
}

enum class CycleStart { Smallest, Largest };

/// Moore determinant: sum over all permutations of the label set, each
/// written in cycle normal form (every cycle led by its smallest label,
/// cycles ordered by decreasing leaders) with factors multiplied strictly in
/// the written order. CycleStart::Largest instead leads every cycle with its
/// largest label, which must give the same value on Hermitian matrices.
template <ScalarKind S>
S moore(const LabeledMatrix<S>& a, CycleStart start = CycleStart::Smallest) {
  if (a.row_labels() != a.col_labels())
    throw DimensionMismatch("moore needs matching row and column labels");
  const int n = a.n();
  if (n == 0) return scalar_one<S>();
  if (n > 8) throw CapExceeded("moore: order " + std::to_string(n) + " exceeds cap 8");
  const std::vector<int>& lb = a.row_labels();

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  S total = scalar_zero<S>();
  do {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(n, false);
    for (int p = 0; p < n; ++p) {
      if (seen[p]) continue;
      std::vector<int> cyc;
      for (int u = p; !seen[u]; u = perm[u]) {
        seen[u] = true;
        cyc.push_back(u);
      }
      int lead = 0;
      for (int t = 1; t < static_cast<int>(cyc.size()); ++t) {
        const bool better = (start == CycleStart::Smallest) ? lb[cyc[t]] < lb[cyc[lead]]
                                                            : lb[cyc[t]] > lb[cyc[lead]];
        if (better) lead = t;
      }
      std::rotate(cyc.begin(), cyc.begin() + lead, cyc.end());
      cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [&](const std::vector<int>& x, const std::vector<int>& y) {
                return lb[x[0]] > lb[y[0]];
              });
    S term = scalar_one<S>();
    for (const auto& cyc : cycles) {
      const int len = static_cast<int>(cyc.size());
      for (int t = 0; t < len; ++t) term = term * a.at_pos(cyc[t], cyc[(t + 1) % len]);
    }
    const int m = static_cast<int>(cycles.size());
    total = ((n - m) % 2 == 0) ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Exact determinant by Gaussian elimination; meaningful for commutative
/// scalar kinds only.
template <ScalarKind S>
S det_commutative(LabeledMatrix<S> a) {
  const int n = a.n();
  S det = scalar_one<S>();
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a.at_pos(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return scalar_zero<S>();
    if (piv != col) {
      negate = !negate;
      for (int c = 0; c < n; ++c) std::swap(a.at_pos(piv, c), a.at_pos(col, c));
    }
    det = det * a.at_pos(col, col);
    const S pinv = inv(a.at_pos(col, col));
    for (int r = col + 1; r < n; ++r) {
      const S f = a.at_pos(r, col) * pinv;
      if (is_zero(f)) continue;
      for (int c = col; c < n; ++c) a.at_pos(r, c) = a.at_pos(r, c) - f * a.at_pos(col, c);
    }
  }
  return negate ? -det : det;
}

/// Entrywise theta embedding into 2n x 2n complex matrices: each quaternion
/// becomes its 2x2 complex image, laid out in blocks, labels 1..2n.
template <class R>
LabeledMatrix<Complex<R>> theta_matrix(const LabeledMatrix<Quaternion<R>>& a) {
  const int n = a.n();
  std::vector<Complex<R>> e(static_cast<std::size_t>(4) * n * n, Complex<R>::zero());
  const int m = 2 * n;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto blk = theta(a.at_pos(r, c));
      e[static_cast<std::size_t>(2 * r) * m + 2 * c] = blk[0];
      e[static_cast<std::size_t>(2 * r) * m + 2 * c + 1] = blk[1];
      e[static_cast<std::size_t>(2 * r + 1) * m + 2 * c] = blk[2];
      e[static_cast<std::size_t>(2 * r + 1) * m + 2 * c + 1] = blk[3];
    }
  return LabeledMatrix<Complex<R>>::fresh(m, std::move(e));
}

/// Study determinant S(A) = det(theta_n(A)); the determinant is real, and the
/// real part is returned.
template <class R>
R study(const LabeledMatrix<Quaternion<R>>& a) {
  return det_commutative(theta_matrix(a)).re;
}

/// Recursive norm: nu(A) = nu(|A|_11) nu(A^{11}) down the chain, nu(0x0) = 1.
/// Only defined on generic matrices.
template <ScalarKind S>
typename scalar_traits<S>::real_type nu_matrix(const LabeledMatrix<S>& a) {
  using R = typename scalar_traits<S>::real_type;
  if (a.n() == 0) return real_traits<R>::one();
  const int i = a.row_labels().front();
  const int j = a.col_labels().front();
  const auto q = quasidet_block(a, i, j);
  if (!q.defined) throw UndefinedResult("undefined: A^{ij} not invertible");
  return nu(q.value) * nu_matrix(a.delete_rc({i}, {j}));
}

/// Total polynomial norm: nu(A) = M(A A*), defined for every matrix.
template <ScalarKind S>
typename scalar_traits<S>::real_type nu_via_moore(const LabeledMatrix<S>& a) {
  using R = typename scalar_traits<S>::real_type;
  if (a.n() == 0) return real_traits<R>::one();
  return scalar_traits<S>::component(moore(matmul(a, a.hermitian_dual())), 0);
}

}  // namespace ncdet
