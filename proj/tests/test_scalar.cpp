#include "doctest.h"
#include "ncdet/complex.hpp"
#include "ncdet/quaternion.hpp"

using namespace ncdet;

namespace {
using QR = QuaternionRational;

QR q(long a, long b, long c, long d) {
  return QR(Rational(a), Rational(b), Rational(c), Rational(d));
}
}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -2) == Rational(-3, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(5).inv() == Rational(1, 5));
  CHECK_THROWS_AS(Rational::zero().inv(), ZeroDivision);
  CHECK_THROWS_AS(Rational(1, 0), ZeroDivision);
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("quaternion product table") {
  const QR i = QR::unit_i(), j = QR::unit_j(), k = QR::unit_k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == -QR::one());
  CHECK((QR::one() + i) * (QR::one() + j) == q(1, 1, 1, 1));
}

TEST_CASE("quaternion conj, nu, inv") {
  const QR h = q(1, 2, 3, 4);
  CHECK(conj(h) == q(1, -2, -3, -4));
  CHECK(nu(h) == Rational(30));
  CHECK(h * inv(h) == QR::one());
  CHECK(inv(QR::one() + QR::unit_i()) == QR(Rational(1, 2), Rational(-1, 2), 0, 0));
  CHECK_THROWS_AS(inv(QR::zero()), ZeroDivision);
  const QR g = q(2, -1, 0, 5);
  CHECK(conj(h * g) == conj(g) * conj(h));
  CHECK(nu(h * g) == nu(h) * nu(g));
}

TEST_CASE("theta embedding") {
  const auto tj = theta(QuaternionRational::unit_j());
  CHECK(tj[0] == ComplexRational(0, 0));
  CHECK(tj[1] == ComplexRational(-1, 0));
  CHECK(tj[2] == ComplexRational(1, 0));
  CHECK(tj[3] == ComplexRational(0, 0));

  const QR h = q(1, 2, 3, 4);
  const auto t = theta(h);
  // det theta(h) = nu(h)
  CHECK(t[0] * t[3] - t[1] * t[2] == ComplexRational(Rational(30), Rational(0)));
  CHECK(from_complex_pair(to_complex_pair(h)) == h);

  // multiplicativity of theta on a sample pair
  const QR g = q(-2, 1, 5, -3);
  const auto tg = theta(g);
  const auto thg = theta(h * g);
  CHECK(thg[0] == t[0] * tg[0] + t[1] * tg[2]);
  CHECK(thg[1] == t[0] * tg[1] + t[1] * tg[3]);
  CHECK(thg[2] == t[2] * tg[0] + t[3] * tg[2]);
  CHECK(thg[3] == t[2] * tg[1] + t[3] * tg[3]);
}

TEST_CASE("complex arithmetic") {
  const ComplexRational z(Rational(1), Rational(2));
  CHECK(z * conj(z) == ComplexRational(Rational(5), Rational(0)));
  CHECK(nu(z) == Rational(5));
  CHECK(inv(z) * z == ComplexRational::one());
  CHECK(is_conj_fixed(ComplexRational(Rational(3), Rational(0))));
  CHECK(!is_conj_fixed(z));
}

TEST_CASE("float tolerance compares against the value scale") {
  const QuaternionF64 x(1e6, 1e-4, 0.0, 0.0);
  const QuaternionF64 y(1e6, 0.0, 0.0, 0.0);
  CHECK(scalar_eq(x, y, Tolerance{1e-9, 1e-12}));
  const QuaternionF64 z(1e6, 10.0, 0.0, 0.0);
  CHECK(!scalar_eq(z, y, Tolerance{1e-9, 1e-12}));
  CHECK(scalar_eq(1.0, 1.0 + 1e-13));
}
