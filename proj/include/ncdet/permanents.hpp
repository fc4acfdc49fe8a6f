#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "ncdet/dets.hpp"

namespace ncdet {

struct MonomialStep {
  int row;
  int col;
  bool conjugate;
};

/// One alternating word a_{i1 j2} ~a_{i2 j2} a_{i2 j3} ... ~a_{ik jk} a_{ik j1},
/// of length 2k-1; a path from i1 to j1 in the oriented 2-graph.
struct MonomialPath {
  std::vector<MonomialStep> steps;
};

inline MonomialPath monomial_path(const Ordering& I, const Ordering& J) {
  if (I.size() != J.size() || I.empty())
    throw DimensionMismatch("monomial orderings must have equal positive length");
  const int k = static_cast<int>(I.size());
  MonomialPath p;
  if (k == 1) {
    p.steps.push_back({I[0], J[0], false});
    return p;
  }
  for (int t = 1; t < k; ++t) {
    p.steps.push_back({I[t - 1], J[t], false});
    p.steps.push_back({I[t], J[t], true});
  }
  p.steps.push_back({I[k - 1], J[0], false});
  return p;
}

template <ScalarKind S>
S eval_path(const LabeledMatrix<S>& a, const MonomialPath& p) {
  S prod = scalar_one<S>();
  for (const MonomialStep& s : p.steps) {
    const S& e = a.at(s.row, s.col);
    prod = prod * (s.conjugate ? conj(e) : e);
  }
  return prod;
}

/// m_{I,J}(A) evaluated on A's entries by original labels.
template <ScalarKind S>
S monomial_value(const LabeledMatrix<S>& a, const Ordering& I, const Ordering& J) {
  return eval_path(a, monomial_path(I, J));
}

namespace detail {

/// All k-subsets of the label list, sorted, in lexicographic order.
inline std::vector<std::vector<int>> ksubsets(const std::vector<int>& labels, int k) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int t = 0; t < k; ++t) idx[t] = t;
  while (true) {
    std::vector<int> sub(k);
    for (int t = 0; t < k; ++t) sub[t] = sorted[idx[t]];
    out.push_back(std::move(sub));
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

/// The k-subsets that contain `fixed`, keeping the lexicographic order.
inline std::vector<std::vector<int>> ksubsets_with(const std::vector<int>& labels, int k,
                                                   int fixed) {
  std::vector<std::vector<int>> out;
  for (auto& sub : ksubsets(labels, k))
    if (std::find(sub.begin(), sub.end(), fixed) != sub.end()) out.push_back(std::move(sub));
  return out;
}

/// All orderings of `subset` that start with `first`, ascending lex.
inline std::vector<Ordering> orderings_with_first(const std::vector<int>& subset, int first) {
  std::vector<int> rest;
  for (int lb : subset)
    if (lb != first) rest.push_back(lb);
  std::sort(rest.begin(), rest.end());
  std::vector<Ordering> out;
  do {
    Ordering o;
    o.reserve(subset.size());
    o.push_back(first);
    o.insert(o.end(), rest.begin(), rest.end());
    out.push_back(std::move(o));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace detail

/// Double permanent pi_{ij}(A): the sum of m_{I,J}(A) over all ordering pairs
/// of A's labels with i1 = i and j1 = j.
template <ScalarKind S>
S double_permanent(const LabeledMatrix<S>& a, int i, int j, int cap = 6) {
  (void)a.row_pos(i);
  (void)a.col_pos(j);
  if (a.n() > cap)
    throw CapExceeded("permanent: order " + std::to_string(a.n()) + " exceeds cap " +
                      std::to_string(cap));
  S acc = scalar_zero<S>();
  for (const Ordering& I : detail::orderings_with_first(a.row_labels(), i))
    for (const Ordering& J : detail::orderings_with_first(a.col_labels(), j))
      acc = acc + monomial_value(a, I, J);
  return acc;
}

/// Right-hand side of the expansion
///   nu(A^{ij}) |A|_{ij} = sum over B of (-1)^{K(B)-1} nu(B^c) pi_{ij}(B),
/// summing over all square submatrices B whose rows contain i and columns
/// contain j; K(B) is B's order, nu(0x0) = 1. Total polynomial, no genericity
/// needed. With conj_pi the pi factor is conjugated, giving the companion sum
/// whose product with the plain one is nu(A) nu(A^{ij}).
template <ScalarKind S>
S rhs_expansion(const LabeledMatrix<S>& a, int i, int j, int cap = 6, bool conj_pi = false) {
  (void)a.row_pos(i);
  (void)a.col_pos(j);
  const int n = a.n();
  if (n > cap)
    throw CapExceeded("expansion: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  S acc = scalar_zero<S>();
  for (int k = 1; k <= n; ++k) {
    const auto cols = detail::ksubsets_with(a.col_labels(), k, j);
    const auto rows = detail::ksubsets_with(a.row_labels(), k, i);
    for (const auto& c : cols)
      for (const auto& r : rows) {
        const LabeledMatrix<S> b = a.submatrix(r, c);
        const S coef = from_real<S>(nu_via_moore(a.delete_rc(r, c)));
        const S pi = double_permanent(b, i, j, cap);
        const S term = coef * (conj_pi ? conj(pi) : pi);
        acc = ((k - 1) % 2 == 0) ? acc + term : acc - term;
      }
  }
  return acc;
}

namespace detail {

template <ScalarKind S>
class QMemo {
 public:
  S value(const LabeledMatrix<S>& a, int i, int j) {
    const auto key = std::make_tuple(a.row_labels(), a.col_labels(), i, j);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    S v = scalar_zero<S>();
    if (a.n() == 1) {
      v = a.at(i, j);
    } else {
      const LabeledMatrix<S> sub = a.delete_rc({i}, {j});
      v = from_real<S>(nu_via_moore(sub)) * a.at(i, j);
      for (int p : sub.row_labels())
        for (int q : sub.col_labels()) v = v - a.at(i, q) * conj(value(sub, p, q)) * a.at(p, j);
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  std::map<std::tuple<std::vector<int>, std::vector<int>, int, int>, S> memo_;
};

}  // namespace detail

/// Q_{ij}(A) = nu(A^{ij}) a_{ij} - sum_{p != i, q != j} a_{iq} conj(Q_{pq}(A^{ij})) a_{pj},
/// memoized over submatrices. Equals rhs_expansion everywhere and
/// nu(A^{ij}) |A|_{ij} on generic matrices.
template <ScalarKind S>
S q_polynomial(const LabeledMatrix<S>& a, int i, int j) {
  detail::QMemo<S> memo;
  return memo.value(a, i, j);
}

/// Hermitian diagonal form of the same recurrence, with the conjugate folded
/// into an index swap: Q_{ii}(A) = nu(A^{ii}) a_{ii} - sum a_{iq} Q_{qp}(A^{ii}) a_{pi}.
/// Only the diagonal keeps every inner index inside A^{ii}.
template <ScalarKind S>
S q_polynomial_hermitian(const LabeledMatrix<S>& a, int i) {
  if (a.n() == 1) return a.at(i, i);
  const LabeledMatrix<S> sub = a.delete_rc({i}, {i});
  S v = from_real<S>(nu_via_moore(sub)) * a.at(i, i);
  detail::QMemo<S> memo;
  for (int p : sub.row_labels())
    for (int q : sub.col_labels()) v = v - a.at(i, q) * memo.value(sub, q, p) * a.at(p, i);
  return v;
}

/// Monomial count mu(n) = 1 + (n-1)^2 mu(n-1), mu(1) = 1.
inline mpz_class mu_count(int n) {
  if (n < 1) throw DimensionMismatch("mu_count needs n >= 1");
  mpz_class mu = 1;
  for (int m = 2; m <= n; ++m) mu = 1 + mpz_class(m - 1) * (m - 1) * mu;
  return mu;
}

inline mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// One signed term of the symbolic expansion: (-1)^sign_exponent nu(B^c) m_{I,J}(B).
struct ExpansionTerm {
  int sign_exponent;
  SubmatrixSpec b;
  MonomialPath path;
};

/// Every monomial of rhs_expansion on an abstract n x n matrix with labels
/// 1..n, in the documented order: k ascending; column subsets ascending lex
/// outside row subsets ascending lex; J orderings ascending lex outside I
/// orderings descending lex. The list length equals mu_count(n).
inline std::vector<ExpansionTerm> enumerate_paths(int n, int i, int j, int cap = 6) {
  if (n < 1) throw DimensionMismatch("expansion needs n >= 1");
  if (n > cap)
    throw CapExceeded("expansion: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (i < 1 || i > n) throw UnknownLabel(i);
  if (j < 1 || j > n) throw UnknownLabel(j);
  std::vector<int> labels(n);
  for (int t = 0; t < n; ++t) labels[t] = t + 1;

  std::vector<ExpansionTerm> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& c : detail::ksubsets_with(labels, k, j))
      for (const auto& r : detail::ksubsets_with(labels, k, i)) {
        auto is_list = detail::orderings_with_first(r, i);
        std::reverse(is_list.begin(), is_list.end());
        for (const Ordering& J : detail::orderings_with_first(c, j))
          for (const Ordering& I : is_list)
            out.push_back({k - 1, SubmatrixSpec{r, c}, monomial_path(I, J)});
      }
  return out;
}

namespace detail {
inline std::string join_labels(const std::vector<int>& labels) {
  std::string s;
  for (int lb : labels) s += std::to_string(lb);
  return s;
}
}  // namespace detail

/// Monomial word: factors space separated, "aRC" plain and "~aRC" conjugated.
inline std::string render_path(const MonomialPath& path) {
  std::string word;
  for (const MonomialStep& s : path.steps) {
    if (!word.empty()) word += ' ';
    word += std::string(s.conjugate ? "~a" : "a") + std::to_string(s.row) + std::to_string(s.col);
  }
  return word;
}

/// The monomials of the full-order double permanent at (i, j), one word per
/// line, in enumeration order.
inline std::string render_permanent(int n, int i, int j, int cap = 6) {
  std::string out;
  for (const ExpansionTerm& t : enumerate_paths(n, i, j, cap))
    if (static_cast<int>(t.b.rows.size()) == n) {
      out += render_path(t.path);
      out += '\n';
    }
  return out;
}

/// Text form of one expansion term: sign, nu coefficient, monomial word.
/// The coefficient names B^c: omitted when B^c is 0x0, "nu(aRC)" when 1x1,
/// otherwise "nu(A^{rows,cols})" listing the deleted (= B's) labels, comma
/// separating the groups only when they hold several labels.
inline std::string render_term(const ExpansionTerm& t, int n) {
  std::string line = (t.sign_exponent % 2 == 0) ? "+" : "-";
  const int k = static_cast<int>(t.b.rows.size());
  if (k == n - 1) {
    int r = 0, c = 0;
    for (int lb = 1; lb <= n; ++lb) {
      if (std::find(t.b.rows.begin(), t.b.rows.end(), lb) == t.b.rows.end()) r = lb;
      if (std::find(t.b.cols.begin(), t.b.cols.end(), lb) == t.b.cols.end()) c = lb;
    }
    line += " nu(a" + std::to_string(r) + std::to_string(c) + ")";
  } else if (k < n - 1) {
    const char* sep = (k == 1) ? "" : ",";
    line += " nu(A^{" + detail::join_labels(t.b.rows) + sep + detail::join_labels(t.b.cols) + "})";
  }
  const std::string word = render_path(t.path);
  if (!word.empty()) line += " " + word;
  return line;
}

/// Full expansion as newline-terminated lines in enumeration order.
inline std::string render_expansion(int n, int i, int j, int cap = 6) {
  std::string out;
  for (const ExpansionTerm& t : enumerate_paths(n, i, j, cap)) {
    out += render_term(t, n);
    out += '\n';
  }
  return out;
}

}  // namespace ncdet
