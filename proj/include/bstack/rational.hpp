#ifndef BSTACK_RATIONAL_HPP_
#define BSTACK_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

#include "bstack/common.hpp"

namespace bstack {

using BigInt = mpz_class;

/// Arbitrary-precision rational with canonical representation
/// (gcd(|num|, den) = 1, den >= 1). Thin wrapper over GMP's mpq_class
/// that adds checked division and the "p/q" textual form.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT
  Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw ArithmeticError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const {
    if (v_ == 0) throw ArithmeticError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Serialized form, always "p/q" (e.g. "3/1", "-1/2").
  std::string to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  /// Human-friendly form, denominator omitted when 1.
  std::string pretty() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    q.canonicalize();
    Rational r;
    r = Rational(q.get_num(), q.get_den());
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: '" + s + "'");
  }
}

}  // namespace bstack

#endif
