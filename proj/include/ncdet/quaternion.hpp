#pragma once

#include <array>

#include "ncdet/complex.hpp"
#include "ncdet/scalar.hpp"

namespace ncdet {

/// Quaternion h = a + b*i + c*j + d*k over an exact or floating real field,
/// with i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik.
template <class R>
struct Quaternion {
  R a{}, b{}, c{}, d{};

  Quaternion()
      : a(real_traits<R>::zero()),
        b(real_traits<R>::zero()),
        c(real_traits<R>::zero()),
        d(real_traits<R>::zero()) {}
  Quaternion(R a, R b, R c, R d)
      : a(std::move(a)), b(std::move(b)), c(std::move(c)), d(std::move(d)) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() {
    return Quaternion(real_traits<R>::one(), real_traits<R>::zero(),
                      real_traits<R>::zero(), real_traits<R>::zero());
  }
  static Quaternion unit_i() {
    return Quaternion(real_traits<R>::zero(), real_traits<R>::one(),
                      real_traits<R>::zero(), real_traits<R>::zero());
  }
  static Quaternion unit_j() {
    return Quaternion(real_traits<R>::zero(), real_traits<R>::zero(),
                      real_traits<R>::one(), real_traits<R>::zero());
  }
  static Quaternion unit_k() {
    return Quaternion(real_traits<R>::zero(), real_traits<R>::zero(),
                      real_traits<R>::zero(), real_traits<R>::one());
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return Quaternion(x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                      x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                      x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                      x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a);
  }
  Quaternion operator-() const { return Quaternion(-a, -b, -c, -d); }
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

  bool is_real() const {
    return real_traits<R>::is_zero(b) && real_traits<R>::is_zero(c) &&
           real_traits<R>::is_zero(d);
  }
};

template <class R>
Quaternion<R> conj(const Quaternion<R>& h) {
  return Quaternion<R>(h.a, -h.b, -h.c, -h.d);
}

template <class R>
bool is_zero(const Quaternion<R>& h) {
  return real_traits<R>::is_zero(h.a) && real_traits<R>::is_zero(h.b) &&
         real_traits<R>::is_zero(h.c) && real_traits<R>::is_zero(h.d);
}

template <class R>
R nu(const Quaternion<R>& h) {
  return h.a * h.a + h.b * h.b + h.c * h.c + h.d * h.d;
}

template <class R>
Quaternion<R> inv(const Quaternion<R>& h) {
  if (is_zero(h)) throw ZeroDivision();
  const R ninv = real_traits<R>::inv(nu(h));
  return Quaternion<R>(h.a * ninv, -h.b * ninv, -h.c * ninv, -h.d * ninv);
}

/// h written as alpha + j*beta with alpha, beta complex. The extraction is
/// alpha = a + b*i, beta = c - d*i; it round-trips and makes theta() a
/// homomorphism of real algebras (validated by the test suite).
template <class R>
struct ComplexPair {
  Complex<R> alpha;
  Complex<R> beta;
};

template <class R>
ComplexPair<R> to_complex_pair(const Quaternion<R>& h) {
  return ComplexPair<R>{Complex<R>(h.a, h.b), Complex<R>(h.c, -h.d)};
}

template <class R>
Quaternion<R> from_complex_pair(const ComplexPair<R>& p) {
  return Quaternion<R>(p.alpha.re, p.alpha.im, p.beta.re, -p.beta.im);
}

/// 2x2 complex image of h, row-major: [alpha, -conj(beta); beta, conj(alpha)].
/// det theta(h) = nu(h).
template <class R>
std::array<Complex<R>, 4> theta(const Quaternion<R>& h) {
  const ComplexPair<R> p = to_complex_pair(h);
  return {p.alpha, -conj(p.beta), p.beta, conj(p.alpha)};
}

template <class R>
struct scalar_traits<Quaternion<R>> {
  using real_type = R;
  static constexpr bool exact = real_traits<R>::exact;
  static constexpr int ncomp = 4;
  static Quaternion<R> from_real(const R& r) {
    return Quaternion<R>(r, real_traits<R>::zero(), real_traits<R>::zero(),
                         real_traits<R>::zero());
  }
  static R component(const Quaternion<R>& h, int i) {
    switch (i) {
      case 0: return h.a;
      case 1: return h.b;
      case 2: return h.c;
      default: return h.d;
    }
  }
};

using QuaternionRational = Quaternion<Rational>;
using QuaternionF64 = Quaternion<double>;

template <class S>
inline constexpr bool is_quaternion_v = false;
template <class R>
inline constexpr bool is_quaternion_v<Quaternion<R>> = true;

}  // namespace ncdet
