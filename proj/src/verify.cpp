#include "ncdet/verify.hpp"

#include <chrono>
#include <functional>

#include "ncdet/permanents.hpp"
#include "ncdet/random.hpp"

namespace ncdet {

namespace {

struct CheckFailure {
  std::string message;
  std::string matrix;
};

template <ScalarKind S>
void require(bool ok, const std::string& message, const LabeledMatrix<S>& m) {
  if (!ok) throw CheckFailure{message, dump_matrix(AnyMatrix(m))};
}

template <class R>
bool real_eq(const R& x, const R& y, const Tolerance& tol) {
  if constexpr (real_traits<R>::exact)
    return x == y;
  else
    return approx_equal(x, y, tol);
}

template <class R>
bool real_is_zero(const R& x, const Tolerance& tol) {
  return real_eq(x, real_traits<R>::zero(), tol);
}

/// Zero test against an external scale, for float values produced by large
/// cancelling sums where the residue is relative to the terms, not the result.
template <class R>
bool real_small(const R& x, double scale, const Tolerance& tol) {
  if constexpr (real_traits<R>::exact)
    return real_traits<R>::is_zero(x);
  else
    return std::abs(x) <= std::max(tol.abs, tol.rel * scale);
}

/// Bounds any permutation-expansion product of entries: the product over rows
/// of the row sums of entry magnitudes.
template <ScalarKind S>
double entry_product_scale(const LabeledMatrix<S>& m) {
  using RT = real_traits<typename scalar_traits<S>::real_type>;
  double prod = 1.0;
  for (int r = 0; r < m.n(); ++r) {
    double row = 0.0;
    for (int c = 0; c < m.n(); ++c) row += std::sqrt(RT::to_double(nu(m.at_pos(r, c))));
    prod *= std::max(row, 1.0);
  }
  return prod;
}

/// True when every non-real component of x vanishes.
template <ScalarKind S>
bool is_real_scalar(const S& x, const Tolerance& tol) {
  return scalar_eq(x, from_real<S>(scalar_traits<S>::component(x, 0)), tol);
}

template <ScalarKind S>
S draw_nonzero(Rng& rng) {
  for (;;) {
    const S x = detail::entry_gen<S>::draw(rng);
    if (!is_zero(x)) return x;
  }
}

std::string pos2(const char* a, int x, const char* b, int y) {
  return std::string("(") + a + "=" + std::to_string(x) + "," + b + "=" + std::to_string(y) + ")";
}

enum class Outcome { Pass, Skip };

template <class Body>
RunReport run_trials(const std::string& name, const VerifyConfig& cfg, int trials, Body&& body) {
  RunReport rep;
  rep.suite = name;
  rep.trials = trials;
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < trials; ++t) {
    const unsigned long long seed = cfg.seed + static_cast<unsigned long long>(t);
    try {
      if (body(seed) == Outcome::Pass)
        ++rep.passes;
      else
        ++rep.skips;
    } catch (const CheckFailure& f) {
      rep.failures.push_back({t, seed, f.message, f.matrix});
    } catch (const DegenerateStream& e) {
      rep.failures.push_back({t, e.seed, e.what(), ""});
    } catch (const UndefinedResult&) {
      ++rep.skips;
    } catch (const SingularMatrix&) {
      ++rep.skips;
    } catch (const ZeroDivision&) {
      ++rep.skips;
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---- homology -------------------------------------------------------------

template <ScalarKind S>
Outcome homology_trial(unsigned long long seed, const VerifyConfig& cfg) {
  const auto a = random_generic_matrix<S>(seed, cfg.n);
  int holds = 0;
  for (int i : a.row_labels())
    for (int j : a.col_labels()) {
      for (int l : a.col_labels()) {
        if (l == j) continue;
        for (int s : a.row_labels()) {
          if (s == i) continue;
          const auto st = check_homological(a, i, j, l, s, i, j, cfg.tol).first;
          require(st != CheckStatus::Fails,
                  "row homological relation fails at " + pos2("i", i, "j", j) + pos2("l", l, "s", s),
                  a);
          if (st == CheckStatus::Holds) ++holds;
        }
      }
      for (int k : a.row_labels()) {
        if (k == i) continue;
        for (int t : a.col_labels()) {
          if (t == j) continue;
          const auto st = check_homological(a, i, j, j, i, k, t, cfg.tol).second;
          require(st != CheckStatus::Fails,
                  "column homological relation fails at " + pos2("i", i, "j", j) + pos2("k", k, "t", t),
                  a);
          if (st == CheckStatus::Holds) ++holds;
        }
      }
    }
  return holds > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- heredity --------------------------------------------------------------

template <ScalarKind S>
Outcome heredity_trial(unsigned long long seed, const VerifyConfig& cfg) {
  const auto a = random_generic_matrix<S>(seed, cfg.n);
  int checked = 0;
  for (int k = 1; k < cfg.n; ++k) {
    for (int ii = 0; ii < k; ++ii)
      for (int jj = 0; jj < k; ++jj) {
        const int i = a.row_labels()[ii];
        const int j = a.col_labels()[jj];
        try {
          require(check_heredity(a, k, i, j, cfg.tol),
                  "heredity fails for block " + std::to_string(k) + " at " + pos2("i", i, "j", j),
                  a);
          ++checked;
        } catch (const SingularMatrix&) {
        } catch (const UndefinedResult&) {
        }
      }
  }
  return checked > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- sylvester -------------------------------------------------------------

template <ScalarKind S>
Outcome sylvester_trial(unsigned long long seed, const VerifyConfig& cfg) {
  const auto a = random_generic_matrix<S>(seed, cfg.n);
  int checked = 0;
  for (int k = 1; k < cfg.n; ++k)
    for (const auto& r : detail::ksubsets(a.row_labels(), k))
      for (const auto& c : detail::ksubsets(a.col_labels(), k)) {
        LabeledMatrix<S> b;
        try {
          b = sylvester_compress(a, SubmatrixSpec{r, c});
        } catch (const SingularMatrix&) {
          continue;
        } catch (const UndefinedResult&) {
          continue;
        }
        for (int p : b.row_labels())
          for (int q : b.col_labels()) {
            const auto qa = quasidet_block(a, p, q);
            const auto qb = quasidet_block(b, p, q);
            if (!qa.defined || !qb.defined) continue;
            require(scalar_eq(qa.value, qb.value, cfg.tol),
                    "compression changes the quasideterminant at " + pos2("i", p, "j", q), a);
            ++checked;
          }
      }
  return checked > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- rowcol ----------------------------------------------------------------

template <ScalarKind S>
Outcome rowcol_trial(unsigned long long seed, const VerifyConfig& cfg) {
  const int n = cfg.n;
  const auto a = random_generic_matrix<S>(seed, n);
  Rng aux(seed + 0x517cc1b727220a95ull);
  int checked = 0;

  // permutations avoiding the pivot row/column
  for (int pp = 0; pp < n; ++pp)
    for (int qq = 0; qq < n; ++qq) {
      const int p = a.row_labels()[pp];
      const int q = a.col_labels()[qq];
      std::vector<int> rperm(n), cperm(n);
      for (int t = 0; t < n; ++t) rperm[t] = cperm[t] = t;
      std::vector<int> others;
      for (int t = 0; t < n; ++t)
        if (t != pp) others.push_back(t);
      for (std::size_t t = 0; t < others.size(); ++t)
        rperm[others[t]] = others[(t + 1) % others.size()];
      others.clear();
      for (int t = 0; t < n; ++t)
        if (t != qq) others.push_back(t);
      for (std::size_t t = 0; t < others.size(); ++t)
        cperm[others[t]] = others[(t + 1) % others.size()];

      const auto base = quasidet_block(a, p, q);
      const auto rowp = quasidet_block(a.permute_rows(rperm), p, q);
      const auto colp = quasidet_block(a.permute_cols(cperm), p, q);
      const auto both = quasidet_block(a.permute_rows(rperm).permute_cols(cperm), p, q);
      for (const auto& other : {rowp, colp, both}) {
        if (!base.defined || !other.defined) continue;
        require(scalar_eq(base.value, other.value, cfg.tol),
                "permutation changes the quasideterminant at " + pos2("p", p, "q", q), a);
        ++checked;
      }
    }

  // row scale from the left, column scale from the right
  const S lam = draw_nonzero<S>(aux);
  const S mu = draw_nonzero<S>(aux);
  for (int i : a.row_labels()) {
    const auto b = a.row_scale(i, lam);
    for (int k : a.row_labels())
      for (int j : a.col_labels()) {
        const auto qa = quasidet_block(a, k, j);
        const auto qb = quasidet_block(b, k, j);
        if (!qa.defined || !qb.defined) continue;
        const S expect = (k == i) ? lam * qa.value : qa.value;
        require(scalar_eq(qb.value, expect, cfg.tol),
                "row scaling breaks covariance at " + pos2("k", k, "j", j), a);
        ++checked;
      }
  }
  for (int j : a.col_labels()) {
    const auto b = a.col_scale(j, mu);
    for (int i : a.row_labels())
      for (int l : a.col_labels()) {
        const auto qa = quasidet_block(a, i, l);
        const auto qb = quasidet_block(b, i, l);
        if (!qa.defined || !qb.defined) continue;
        const S expect = (l == j) ? qa.value * mu : qa.value;
        require(scalar_eq(qb.value, expect, cfg.tol),
                "column scaling breaks covariance at " + pos2("i", i, "l", l), a);
        ++checked;
      }
  }

  // row/column addition: invariant except on the donor line
  const S lam2 = detail::entry_gen<S>::draw(aux);
  for (int p : a.row_labels())
    for (int k : a.row_labels()) {
      if (k == p) continue;
      const auto b = a.row_add(p, k, lam2);
      for (int i : a.row_labels()) {
        if (i == k) continue;
        for (int j : a.col_labels()) {
          const auto qa = quasidet_block(a, i, j);
          const auto qb = quasidet_block(b, i, j);
          if (!qa.defined || !qb.defined) continue;
          require(scalar_eq(qa.value, qb.value, cfg.tol),
                  "row addition changes the quasideterminant at " + pos2("i", i, "j", j), a);
          ++checked;
        }
      }
    }
  for (int q : a.col_labels())
    for (int l : a.col_labels()) {
      if (l == q) continue;
      const auto b = a.col_add(q, l, lam2);
      for (int j : a.col_labels()) {
        if (j == l) continue;
        for (int i : a.row_labels()) {
          const auto qa = quasidet_block(a, i, j);
          const auto qb = quasidet_block(b, i, j);
          if (!qa.defined || !qb.defined) continue;
          require(scalar_eq(qa.value, qb.value, cfg.tol),
                  "column addition changes the quasideterminant at " + pos2("i", i, "j", j), a);
          ++checked;
        }
      }
    }
  return checked > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- commutative -----------------------------------------------------------

Outcome commutative_trial(unsigned long long seed, const VerifyConfig& cfg) {
  using S = ComplexRational;
  const auto a = random_generic_matrix<S>(seed, cfg.n);
  const S det = det_commutative(a);
  int checked = 0;
  for (int p : a.row_labels())
    for (int q : a.col_labels()) {
      const auto qd = quasidet_block(a, p, q);
      if (!qd.defined) continue;
      const S sub = det_commutative(a.delete_rc({p}, {q}));
      const S lhs = qd.value * sub;
      const S rhs = ((p + q) % 2 == 0) ? det : -det;
      require(scalar_eq(lhs, rhs, cfg.tol), "ratio law fails at " + pos2("p", p, "q", q), a);
      ++checked;
    }
  return checked > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- predet ----------------------------------------------------------------

std::vector<Ordering> all_orderings(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<Ordering> out;
  do {
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

template <ScalarKind S>
Outcome predet_trial(unsigned long long seed, const VerifyConfig& cfg) {
  using R = typename scalar_traits<S>::real_type;
  const int n = cfg.n;
  const auto a = random_generic_matrix<S>(seed, n);

  const auto f = gauss_udl(a);
  require(matmul(matmul(f.U, f.D), f.L).entries_equal(a, cfg.tol), "U D L does not reconstruct A", a);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const S u = f.U.at_pos(r, c), l = f.L.at_pos(r, c);
      if (r == c) {
        require(scalar_eq(u, scalar_one<S>(), cfg.tol) && scalar_eq(l, scalar_one<S>(), cfg.tol),
                "factor diagonal is not unit", a);
      } else if (r > c) {
        require(scalar_eq(u, scalar_zero<S>(), cfg.tol), "U is not upper triangular", a);
      } else {
        require(scalar_eq(l, scalar_zero<S>(), cfg.tol), "L is not lower triangular", a);
      }
    }
  const S da = delta(a);
  require(scalar_eq(dieudonne_pre(a), da, cfg.tol), "diagonal product differs from the predeterminant", a);

  // the squared value is the same for every ordering pair
  const R ref = nu(da);
  for (const Ordering& I : all_orderings(a.row_labels()))
    for (const Ordering& J : all_orderings(a.col_labels())) {
      S v;
      try {
        v = predet(a, I, J);
      } catch (const UndefinedResult&) {
        continue;
      }
      require(real_eq(nu(v), ref, cfg.tol), "ordering pair changes the squared value", a);
    }

  // Hermitian samples: an ordering pair reproduces the base value up to parity
  // whenever each column label stays within one step of the rows consumed so
  // far ("staircase" pairs; with commuting entries the restriction is vacuous).
  // Non-staircase pairs over quaternions generally give a non-real value and
  // only match in squared magnitude.
  const auto h = random_hermitian_generic<S>(seed, n);
  const S dh = delta(h);
  require(is_real_scalar(dh, cfg.tol), "base value not real on a Hermitian matrix", h);
  const auto staircase = [](const Ordering& I, const Ordering& J) {
    for (std::size_t k = 0; k < J.size(); ++k) {
      bool seen = false;
      for (std::size_t t = 0; t <= k + 1 && t < I.size(); ++t) seen = seen || I[t] == J[k];
      if (!seen) return false;
    }
    return true;
  };
  const R href = nu(dh);
  for (const Ordering& I : all_orderings(h.row_labels()))
    for (const Ordering& J : all_orderings(h.col_labels())) {
      S v;
      try {
        v = predet(h, I, J);
      } catch (const UndefinedResult&) {
        continue;
      }
      require(real_eq(nu(v), href, cfg.tol),
              "ordering pair changes the squared value on a Hermitian matrix", h);
      if (is_quaternion_v<S> && !staircase(I, J)) continue;
      if (parity(I) * parity(J) < 0) v = -v;
      require(scalar_eq(v, dh, cfg.tol), "parity rule fails on a Hermitian matrix", h);
    }
  return Outcome::Pass;
}

// ---- expansion -------------------------------------------------------------

template <ScalarKind S>
Outcome expansion_trial(unsigned long long seed, const VerifyConfig& cfg) {
  using R = typename scalar_traits<S>::real_type;
  const auto a = random_generic_matrix<S>(seed, cfg.n);
  int checked = 0;
  for (int i : a.row_labels())
    for (int j : a.col_labels()) {
      const S rhs = rhs_expansion(a, i, j, cfg.cap);
      require(scalar_eq(q_polynomial(a, i, j), rhs, cfg.tol),
              "Q recurrence differs from the expansion at " + pos2("i", i, "j", j), a);
      const auto sub = a.delete_rc({i}, {j});
      const auto qd = quasidet_block(a, i, j);
      if (qd.defined) {
        const S lhs = from_real<S>(nu_via_moore(sub)) * qd.value;
        require(scalar_eq(lhs, rhs, cfg.tol),
                "expansion differs from nu * quasideterminant at " + pos2("i", i, "j", j), a);
        ++checked;
      }
      const S rhsc = rhs_expansion(a, i, j, cfg.cap, true);
      const R prod = nu_via_moore(a) * nu_via_moore(sub);
      require(scalar_eq(rhs * rhsc, from_real<S>(prod), cfg.tol),
              "norm product rule fails at " + pos2("i", i, "j", j), a);
    }

  const auto h = random_hermitian_generic<S>(seed, cfg.n);
  for (int p : h.row_labels())
    for (int q : h.col_labels())
      require(scalar_eq(conj(q_polynomial(h, p, q)), q_polynomial(h, q, p), cfg.tol),
              "conjugate symmetry of Q fails at " + pos2("p", p, "q", q), h);
  for (int i : h.row_labels())
    require(scalar_eq(q_polynomial_hermitian(h, i), q_polynomial(h, i, i), cfg.tol),
            "Hermitian form of the Q recurrence differs at i=" + std::to_string(i), h);
  return checked > 0 ? Outcome::Pass : Outcome::Skip;
}

// ---- moore -----------------------------------------------------------------

template <ScalarKind S>
Outcome moore_trial(unsigned long long seed, const VerifyConfig& cfg) {
  const auto h = random_hermitian_generic<S>(seed, cfg.n);
  const S m = moore(h);
  require(is_real_scalar(m, cfg.tol), "moore value not real on a Hermitian matrix", h);
  require(scalar_eq(moore(h, CycleStart::Largest), m, cfg.tol),
          "largest-leader cycle form changes the moore value", h);
  const S d = delta(h);
  require(scalar_eq(d, m, cfg.tol), "predeterminant differs from moore on a Hermitian matrix", h);
  return Outcome::Pass;
}

// ---- study -----------------------------------------------------------------

template <class R>
Outcome study_trial(unsigned long long seed, const VerifyConfig& cfg) {
  using S = Quaternion<R>;
  Rng rng(seed);
  const auto a = random_matrix<S>(rng, cfg.n);
  const Complex<R> dth = det_commutative(theta_matrix(a));
  require(is_real_scalar(dth, cfg.tol), "study determinant has an imaginary part", a);
  const S m = moore(matmul(a, a.hermitian_dual()));
  require(is_real_scalar(m, cfg.tol), "moore of A A* not real", a);
  require(real_eq(dth.re, scalar_traits<S>::component(m, 0), cfg.tol),
          "study determinant differs from moore of A A*", a);
  if constexpr (real_traits<R>::exact)
    require(dth.re.sign() >= 0, "study determinant is negative", a);
  else
    require(dth.re >= -std::max(cfg.tol.abs, cfg.tol.rel * entry_product_scale(theta_matrix(a))),
            "study determinant is negative", a);

  const auto s = random_singular_matrix<S>(seed, cfg.n);
  require(real_small(study(s), entry_product_scale(theta_matrix(s)), cfg.tol),
          "study determinant nonzero on a singular matrix", s);
  return Outcome::Pass;
}

// ---- norm ------------------------------------------------------------------

template <ScalarKind S>
Outcome norm_trial(unsigned long long seed, const VerifyConfig& cfg) {
  using R = typename scalar_traits<S>::real_type;
  const int n = cfg.n;
  const auto a = random_generic_matrix<S>(2 * seed, n);
  const auto b = random_generic_matrix<S>(2 * seed + 1, n);

  const R nua = nu_via_moore(a);
  const R nub = nu_via_moore(b);
  require(real_eq(nu_via_moore(matmul(a, b)), nua * nub, cfg.tol), "norm is not multiplicative", a);

  // The two base predeterminants multiply to the norm as magnitudes; their
  // literal product is generally not real, so compare squared values.
  require(real_eq(nu(delta(a)) * nu(delta(a.hermitian_dual())), nua * nua, cfg.tol),
          "norm differs from the product of predeterminants", a);
  require(scalar_eq(delta(matmul(a, a.hermitian_dual())), from_real<S>(nua), cfg.tol),
          "norm differs from the predeterminant of A A*", a);
  require(real_eq(nu_matrix(a), nua, cfg.tol), "recursive norm differs from the polynomial norm", a);

  require(!real_is_zero(nua, cfg.tol), "norm vanishes on an invertible matrix", a);
  (void)invert(a);

  const auto s = random_singular_matrix<S>(seed, n);
  require(real_small(nu_via_moore(s), entry_product_scale(matmul(s, s.hermitian_dual())), cfg.tol),
          "norm nonzero on a singular matrix", s);
  // Exact elimination cancels duplicated rows to literal zeros; float pivots
  // only shrink to roundoff, so the throw is asserted for exact kinds alone.
  if constexpr (scalar_traits<S>::exact) {
    bool threw = false;
    try {
      (void)invert(s);
    } catch (const SingularMatrix&) {
      threw = true;
    }
    require(threw, "a singular sample was inverted", s);
  }

  Rng aux(seed + 0x9e3779b97f4a7c15ull);
  const S lam = detail::entry_gen<S>::draw(aux);
  for (int p : a.row_labels())
    for (int k : a.row_labels()) {
      if (k == p) continue;
      require(real_eq(nu_via_moore(a.row_add(p, k, lam)), nua, cfg.tol),
              "norm changes under row addition", a);
    }
  for (int q : a.col_labels())
    for (int l : a.col_labels()) {
      if (l == q) continue;
      require(real_eq(nu_via_moore(a.col_add(q, l, lam)), nua, cfg.tol),
              "norm changes under column addition", a);
    }
  return Outcome::Pass;
}

// ---- census ----------------------------------------------------------------

RunReport census_report(const VerifyConfig& cfg) {
  RunReport rep;
  rep.suite = "census";
  const auto t0 = std::chrono::steady_clock::now();
  auto check = [&](bool ok, const std::string& message) {
    ++rep.trials;
    if (ok)
      ++rep.passes;
    else
      rep.failures.push_back({rep.trials - 1, cfg.seed, message, ""});
  };

  const long expected[] = {1, 2, 9, 82, 1313};
  for (int n = 1; n <= 5; ++n)
    check(mu_count(n) == expected[n - 1],
          "mu(" + std::to_string(n) + ") != " + std::to_string(expected[n - 1]));

  for (int n = 2; n <= 4; ++n) {
    const auto terms = enumerate_paths(n, 1, 1, cfg.cap);
    check(mpz_class(terms.size()) == mu_count(n),
          "enumeration size differs from mu(" + std::to_string(n) + ")");
    bool shapes = true;
    std::vector<long> per_k(n + 1, 0);
    for (const auto& t : terms) {
      const int k = static_cast<int>(t.b.rows.size());
      ++per_k[k];
      if (static_cast<int>(t.path.steps.size()) != 2 * k - 1) shapes = false;
      for (std::size_t s = 0; s < t.path.steps.size(); ++s)
        if (t.path.steps[s].conjugate != (s % 2 == 1)) shapes = false;
    }
    check(shapes, "monomial shape violated at n=" + std::to_string(n));
    bool groups = true;
    for (int k = 1; k <= n; ++k) {
      mpz_class want = binomial(n - 1, k - 1) * binomial(n - 1, k - 1);
      mpz_class fact = 1;
      for (int t = 2; t < k; ++t) fact *= t;
      want *= fact * fact;
      if (mpz_class(per_k[k]) != want) groups = false;
    }
    check(groups, "per-order monomial counts are off at n=" + std::to_string(n));
  }

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      check(mpz_class(enumerate_paths(3, i, j, cfg.cap).size()) == mu_count(3),
            "enumeration size depends on the position " + pos2("i", i, "j", j));

  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---- dispatch ----------------------------------------------------------------

template <class S>
struct type_tag {
  using type = S;
};

template <class Fn>
RunReport dispatch_scalar(ScalarTag tag, Fn&& fn) {
  switch (tag) {
    case ScalarTag::RationalQuaternion: return fn(type_tag<QuaternionRational>{});
    case ScalarTag::F64Quaternion: return fn(type_tag<QuaternionF64>{});
    case ScalarTag::RationalComplex: return fn(type_tag<ComplexRational>{});
    case ScalarTag::RationalOnly: return fn(type_tag<Rational>{});
  }
  throw ParseError("unknown scalar kind");
}

RunReport run_one(const std::string& name, const VerifyConfig& cfg) {
  if (name == "census") return census_report(cfg);
  if (name == "commutative")
    return run_trials(name, cfg, cfg.trials,
                      [&](unsigned long long s) { return commutative_trial(s, cfg); });
  if (name == "study") {
    if (cfg.scalar == ScalarTag::F64Quaternion)
      return run_trials(name, cfg, cfg.trials,
                        [&](unsigned long long s) { return study_trial<double>(s, cfg); });
    if (cfg.scalar == ScalarTag::RationalQuaternion)
      return run_trials(name, cfg, cfg.trials,
                        [&](unsigned long long s) { return study_trial<Rational>(s, cfg); });
    throw ParseError("study suite requires a quaternion scalar kind");
  }
  return dispatch_scalar(cfg.scalar, [&](auto t) {
    using S = typename decltype(t)::type;
    std::function<Outcome(unsigned long long)> body;
    if (name == "homology")
      body = [&cfg](unsigned long long s) { return homology_trial<S>(s, cfg); };
    else if (name == "heredity")
      body = [&cfg](unsigned long long s) { return heredity_trial<S>(s, cfg); };
    else if (name == "sylvester")
      body = [&cfg](unsigned long long s) { return sylvester_trial<S>(s, cfg); };
    else if (name == "rowcol")
      body = [&cfg](unsigned long long s) { return rowcol_trial<S>(s, cfg); };
    else if (name == "predet")
      body = [&cfg](unsigned long long s) { return predet_trial<S>(s, cfg); };
    else if (name == "expansion")
      body = [&cfg](unsigned long long s) { return expansion_trial<S>(s, cfg); };
    else if (name == "moore")
      body = [&cfg](unsigned long long s) { return moore_trial<S>(s, cfg); };
    else if (name == "norm")
      body = [&cfg](unsigned long long s) { return norm_trial<S>(s, cfg); };
    else
      throw ParseError("unknown suite \"" + name + "\"");
    return run_trials(name, cfg, cfg.trials, body);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "homology", "heredity", "sylvester", "rowcol", "commutative", "predet",
      "expansion",    "moore",    "study",     "norm",   "census"};
  return names;
}

std::vector<RunReport> run_verify(const VerifyConfig& cfg) {
  std::vector<RunReport> out;
  if (cfg.suite == "all") {
    for (const std::string& name : suite_names()) {
      VerifyConfig sub = cfg;
      if (name == "study" && cfg.scalar != ScalarTag::RationalQuaternion &&
          cfg.scalar != ScalarTag::F64Quaternion)
        sub.scalar = ScalarTag::RationalQuaternion;
      out.push_back(run_one(name, sub));
    }
    return out;
  }
  out.push_back(run_one(cfg.suite, cfg));
  return out;
}

}  // namespace ncdet
