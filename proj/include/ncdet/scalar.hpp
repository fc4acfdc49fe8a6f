#pragma once

#include <cmath>
#include <concepts>
#include <cstdlib>

#include "ncdet/rational.hpp"

namespace ncdet {

// The scalar contract shared by every entry kind: a division algebra over an
// exact or floating real field, carrying an anti-involution conj() with
// conj(xy) = conj(y)conj(x) and conj(conj(x)) = x. Elements fixed by conj()
// are central. nu(x) = x * conj(x) lands in the real field.

template <class R>
struct real_traits;

template <>
struct real_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational::zero(); }
  static Rational one() { return Rational::one(); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational inv(const Rational& x) { return x.inv(); }
  static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct real_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static bool is_zero(double x) { return x == 0.0; }
  static double inv(double x) {
    if (x == 0.0) throw ZeroDivision();
    return 1.0 / x;
  }
  static double to_double(double x) { return x; }
};

template <class S>
struct scalar_traits;  // specialized per scalar kind

// Real numbers are themselves scalars: conjugation is the identity.
template <>
struct scalar_traits<Rational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static constexpr int ncomp = 1;
  static Rational from_real(const Rational& r) { return r; }
  static Rational component(const Rational& x, int) { return x; }
};

template <>
struct scalar_traits<double> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr int ncomp = 1;
  static double from_real(double r) { return r; }
  static double component(double x, int) { return x; }
};

inline Rational conj(const Rational& x) { return x; }
inline Rational inv(const Rational& x) { return x.inv(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational nu(const Rational& x) { return x * x; }

inline double conj(double x) { return x; }
inline double inv(double x) { return real_traits<double>::inv(x); }
inline bool is_zero(double x) { return x == 0.0; }
inline double nu(double x) { return x * x; }

template <class S>
concept ScalarKind = requires(const S& a, const S& b) {
  typename scalar_traits<S>::real_type;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { conj(a) } -> std::convertible_to<S>;
  { inv(a) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { nu(a) } -> std::convertible_to<typename scalar_traits<S>::real_type>;
  { a == b } -> std::convertible_to<bool>;
};

template <ScalarKind S>
S scalar_zero() {
  return scalar_traits<S>::from_real(real_traits<typename scalar_traits<S>::real_type>::zero());
}

template <ScalarKind S>
S scalar_one() {
  return scalar_traits<S>::from_real(real_traits<typename scalar_traits<S>::real_type>::one());
}

template <ScalarKind S>
S from_real(const typename scalar_traits<S>::real_type& r) {
  return scalar_traits<S>::from_real(r);
}

/// True when conj fixes the element; such elements are central.
template <ScalarKind S>
bool is_conj_fixed(const S& x) {
  return x == conj(x);
}

/// Relative/absolute tolerances used only for float scalar kinds; exact kinds
/// always compare bit-exactly.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

inline bool approx_equal(double x, double y, const Tolerance& tol) {
  const double diff = std::abs(x - y);
  const double scale = std::max(std::abs(x), std::abs(y));
  return diff <= std::max(tol.abs, tol.rel * scale);
}

/// Exact kinds compare bit-exactly. Float kinds compare every component
/// against a common scale (the largest component magnitude on either side), so
/// a component that should cancel to zero is judged relative to the value as a
/// whole rather than to itself.
template <ScalarKind S>
bool scalar_eq(const S& a, const S& b, const Tolerance& tol = {}) {
  if constexpr (scalar_traits<S>::exact) {
    (void)tol;
    return a == b;
  } else {
    using RT = real_traits<typename scalar_traits<S>::real_type>;
    double scale = 0.0;
    for (int i = 0; i < scalar_traits<S>::ncomp; ++i) {
      scale = std::max(scale, std::abs(RT::to_double(scalar_traits<S>::component(a, i))));
      scale = std::max(scale, std::abs(RT::to_double(scalar_traits<S>::component(b, i))));
    }
    const double bound = std::max(tol.abs, tol.rel * scale);
    for (int i = 0; i < scalar_traits<S>::ncomp; ++i) {
      const double x = RT::to_double(scalar_traits<S>::component(a, i));
      const double y = RT::to_double(scalar_traits<S>::component(b, i));
      if (std::abs(x - y) > bound) return false;
    }
    return true;
  }
}

}  // namespace ncdet
