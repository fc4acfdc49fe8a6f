#pragma once

#include <random>

#include "ncdet/dets.hpp"

namespace ncdet {

/// Deterministic generator: mt19937_64 (bit-stable across platforms) with
/// plain modulo mapping, so streams are reproducible from a seed alone.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  long range(long lo, long hi) {
    const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

template <class S>
struct entry_gen;

template <>
struct entry_gen<QuaternionRational> {
  static QuaternionRational draw(Rng& r) {
    const long a = r.range(-9, 9), b = r.range(-9, 9), c = r.range(-9, 9), d = r.range(-9, 9);
    return QuaternionRational(Rational(a), Rational(b), Rational(c), Rational(d));
  }
  static QuaternionRational draw_real(Rng& r) {
    return QuaternionRational(Rational(r.range(-9, 9)), Rational(0), Rational(0), Rational(0));
  }
};

template <>
struct entry_gen<QuaternionF64> {
  static QuaternionF64 draw(Rng& r) {
    const double a = static_cast<double>(r.range(-9, 9));
    const double b = static_cast<double>(r.range(-9, 9));
    const double c = static_cast<double>(r.range(-9, 9));
    const double d = static_cast<double>(r.range(-9, 9));
    return QuaternionF64(a, b, c, d);
  }
  static QuaternionF64 draw_real(Rng& r) {
    return QuaternionF64(static_cast<double>(r.range(-9, 9)), 0.0, 0.0, 0.0);
  }
};

template <>
struct entry_gen<ComplexRational> {
  static ComplexRational draw(Rng& r) {
    const long re = r.range(-9, 9), im = r.range(-9, 9);
    return ComplexRational(Rational(re), Rational(im));
  }
  static ComplexRational draw_real(Rng& r) { return ComplexRational(Rational(r.range(-9, 9)), Rational(0)); }
};

template <>
struct entry_gen<Rational> {
  static Rational draw(Rng& r) { return Rational(r.range(-9, 9)); }
  static Rational draw_real(Rng& r) { return draw(r); }
};

}  // namespace detail

/// Uniform integer-component matrix, components in [-9, 9], labels 1..n.
template <ScalarKind S>
LabeledMatrix<S> random_matrix(Rng& rng, int n) {
  std::vector<S> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int t = 0; t < n * n; ++t) e.push_back(detail::entry_gen<S>::draw(rng));
  return LabeledMatrix<S>::fresh(n, std::move(e));
}

/// Random Hermitian matrix: real diagonal, lower triangle the conjugate of
/// the independently drawn upper triangle.
template <ScalarKind S>
LabeledMatrix<S> random_hermitian(Rng& rng, int n) {
  LabeledMatrix<S> a = LabeledMatrix<S>::fresh(
      n, std::vector<S>(static_cast<std::size_t>(n) * n, scalar_zero<S>()));
  for (int r = 0; r < n; ++r) {
    a.at_pos(r, r) = detail::entry_gen<S>::draw_real(rng);
    for (int c = r + 1; c < n; ++c) {
      const S h = detail::entry_gen<S>::draw(rng);
      a.at_pos(r, c) = h;
      a.at_pos(c, r) = conj(h);
    }
  }
  return a;
}

/// Genericity proxy: the Gauss decomposition succeeds (all y_k invertible)
/// for the matrix and for its Hermitian product A A*.
template <ScalarKind S>
bool is_generic_sample(const LabeledMatrix<S>& a) {
  try {
    (void)gauss_udl(a);
    (void)gauss_udl(matmul(a, a.hermitian_dual()));
    return true;
  } catch (const SingularMatrix&) {
    return false;
  }
}

inline constexpr int kResampleLimit = 100;

/// Deterministic generic sample: draws from the seeded stream, rejecting
/// degenerate candidates, up to the resample limit.
template <ScalarKind S>
LabeledMatrix<S> random_generic_matrix(unsigned long long seed, int n) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    LabeledMatrix<S> a = random_matrix<S>(rng, n);
    if (is_generic_sample(a)) return a;
  }
  throw DegenerateStream(seed, kResampleLimit);
}

template <ScalarKind S>
LabeledMatrix<S> random_hermitian_generic(unsigned long long seed, int n) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    LabeledMatrix<S> a = random_hermitian<S>(rng, n);
    if (is_generic_sample(a)) return a;
  }
  throw DegenerateStream(seed, kResampleLimit);
}

/// Deliberately non-invertible sample: a random matrix with its last row
/// overwritten by its first (n >= 2), or the 1x1 zero matrix.
template <ScalarKind S>
LabeledMatrix<S> random_singular_matrix(unsigned long long seed, int n) {
  Rng rng(seed);
  LabeledMatrix<S> a = random_matrix<S>(rng, n);
  if (n == 1) {
    a.at_pos(0, 0) = scalar_zero<S>();
    return a;
  }
  for (int c = 0; c < n; ++c) a.at_pos(n - 1, c) = a.at_pos(0, c);
  return a;
}

}  // namespace ncdet
