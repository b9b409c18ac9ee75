#ifndef BSTACK_POLYNOMIAL_HPP_
#define BSTACK_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include "bstack/rational.hpp"

namespace bstack {

/// Dense integer polynomial, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.assign(1, BigInt(constant));
  }

  static IntPoly monomial(int degree, const BigInt& coeff = 1);
  /// t^n - 1.
  static IntPoly tn_minus_1(int n);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  BigInt coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0);
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Quotient if divisor divides exactly (over Z), else nullopt-like flag.
  bool divide_exact(const IntPoly& divisor, IntPoly& quotient) const;

  BigInt evaluate(const BigInt& x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// m-th cyclotomic polynomial with integer coefficients.
const IntPoly& cyclotomic_poly_z(int m);

}  // namespace bstack

#endif
