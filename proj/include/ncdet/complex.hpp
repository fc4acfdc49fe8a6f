#pragma once

#include <string>

#include "ncdet/scalar.hpp"

namespace ncdet {

/// Commutative complex scalar over an exact or floating real field.
template <class R>
struct Complex {
  R re{};
  R im{};

  Complex() : re(real_traits<R>::zero()), im(real_traits<R>::zero()) {}
  Complex(R re, R im) : re(std::move(re)), im(std::move(im)) {}

  static Complex zero() { return Complex(); }
  static Complex one() { return Complex(real_traits<R>::one(), real_traits<R>::zero()); }

  friend Complex operator+(const Complex& x, const Complex& y) {
    return Complex(x.re + y.re, x.im + y.im);
  }
  friend Complex operator-(const Complex& x, const Complex& y) {
    return Complex(x.re - y.re, x.im - y.im);
  }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return Complex(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  Complex operator-() const { return Complex(-re, -im); }
  friend bool operator==(const Complex& x, const Complex& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const Complex& x, const Complex& y) { return !(x == y); }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
  return Complex<R>(z.re, -z.im);
}

template <class R>
bool is_zero(const Complex<R>& z) {
  return real_traits<R>::is_zero(z.re) && real_traits<R>::is_zero(z.im);
}

template <class R>
R nu(const Complex<R>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class R>
Complex<R> inv(const Complex<R>& z) {
  if (is_zero(z)) throw ZeroDivision();
  const R n = nu(z);
  const R ninv = real_traits<R>::inv(n);
  return Complex<R>(z.re * ninv, -z.im * ninv);
}

template <class R>
struct scalar_traits<Complex<R>> {
  using real_type = R;
  static constexpr bool exact = real_traits<R>::exact;
  static constexpr int ncomp = 2;
  static Complex<R> from_real(const R& r) { return Complex<R>(r, real_traits<R>::zero()); }
  static R component(const Complex<R>& z, int i) { return i == 0 ? z.re : z.im; }
};

using ComplexRational = Complex<Rational>;
using ComplexF64 = Complex<double>;

}  // namespace ncdet
