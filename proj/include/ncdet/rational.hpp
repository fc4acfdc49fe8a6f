#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <utility>

#include "ncdet/errors.hpp"

namespace ncdet {

/// Arbitrary-precision rational number, always reduced to lowest terms with a
/// positive denominator. The canonical zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den) {
    if (den == 0) throw ZeroDivision();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" with an optional leading sign on p. The denominator
  /// must be a plain nonzero digit string.
  static Rational parse(const std::string& text) {
    const auto bad = [&text](const char* why) {
      throw ParseError("bad rational \"" + text + "\": " + why);
    };
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) bad("missing numerator digits");
    // mpz rejects an explicit plus sign.
    std::string num = text.substr(text[0] == '+' ? 1 : 0, pos - (text[0] == '+' ? 1 : 0));
    std::string den = "1";
    if (pos < text.size()) {
      if (text[pos] != '/') bad("unexpected character");
      den = text.substr(pos + 1);
      if (den.empty()) bad("missing denominator digits");
      for (char ch : den)
        if (!std::isdigit(static_cast<unsigned char>(ch))) bad("bad denominator");
    }
    Rational r;
    r.v_ = mpq_class(mpz_class(num), mpz_class(den));
    if (r.v_.get_den() == 0) bad("zero denominator");
    r.v_.canonicalize();
    return r;
  }

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw ZeroDivision();
    return Rational(x.v_ / y.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Rational inv() const {
    if (is_zero()) throw ZeroDivision();
    return Rational(1 / v_);
  }

  double to_double() const { return v_.get_d(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace ncdet
