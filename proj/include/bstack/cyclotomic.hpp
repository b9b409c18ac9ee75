#ifndef BSTACK_CYCLOTOMIC_HPP_
#define BSTACK_CYCLOTOMIC_HPP_

#include <string>
#include <vector>

#include "bstack/rational.hpp"

namespace bstack {

int euler_phi(int m);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Coefficients (ascending degree) of the m-th cyclotomic polynomial over Q.
/// Computed once per m via x^m - 1 = prod_{d|m} Phi_d and cached; the cache
/// is guarded by a mutex, so concurrent first use is safe.
const std::vector<Rational>& cyclotomic_poly(int m);

/// Exact element of Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} reduced modulo Phi_m. The representation
/// in a fixed field is unique; values carried in different fields compare
/// equal iff they agree after embedding into Q(zeta_lcm).
class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), c_(1, Rational(0)) {}
  explicit CyclotomicNumber(const Rational& r) : order_(1), c_(1, r) {}
  CyclotomicNumber(long n) : CyclotomicNumber(Rational(n)) {}  // NOLINT

  /// Builds sum_i coeffs[i] * zeta_m^i (any length < m allowed) and reduces.
  static CyclotomicNumber from_powers(int m, const std::vector<Rational>& coeffs);
  /// zeta_m, a primitive m-th root of unity.
  static CyclotomicNumber zeta(int m);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == CyclotomicNumber(Rational(1)); }
  bool is_rational() const;
  /// Value as a Rational; requires is_rational().
  Rational rational_value() const;

  /// Same value expressed in Q(zeta_M); requires order() | M.
  CyclotomicNumber embedded(int M) const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  /// Throws ArithmeticError on division by zero.
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this = *this / o; }

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;
  /// Image under zeta_m -> zeta_m^{m-1} (complex conjugation).
  CyclotomicNumber conjugate() const;

  /// Multiplicative order, or 0 if the value is not a root of unity
  /// (gives up after `cap` multiplications).
  long multiplicative_order(long cap = 10000) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return !(a == b);
  }

  /// Canonical key "m:c0,c1,..."; equal keys <=> identical representation.
  std::string key() const;
  /// Human-readable form like "1/2 + 3/2*z6^1".
  std::string pretty() const;

 private:
  CyclotomicNumber(int m, std::vector<Rational> c) : order_(m), c_(std::move(c)) {}

  int order_;
  std::vector<Rational> c_;
};

}  // namespace bstack

#endif
