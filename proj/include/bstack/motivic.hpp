#ifndef BSTACK_MOTIVIC_HPP_
#define BSTACK_MOTIVIC_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bstack/polynomial.hpp"

namespace bstack {

/// Element of Z[L][L^-1, (L^n - 1)^-1]: an integer polynomial numerator over
/// a formal denominator L^a * prod_d Phi_d(L)^{e_d}. Since L^n - 1 factors as
/// the product of Phi_d over d | n, cyclotomic exponents represent exactly
/// the denominators generated by the (L^n - 1). The fraction is kept fully
/// reduced (no Phi_d or L factor shared between numerator and denominator),
/// which makes equality a structural comparison.
class LocalizedPoly {
 public:
  LocalizedPoly() = default;                      // zero
  LocalizedPoly(IntPoly p) : num_(std::move(p)) {}  // NOLINT
  LocalizedPoly(long c) : num_(IntPoly(c)) {}       // NOLINT

  static LocalizedPoly one() { return LocalizedPoly(1); }
  static LocalizedPoly L() { return LocalizedPoly(IntPoly::monomial(1)); }
  static LocalizedPoly L_power(int a);

  const IntPoly& numerator() const { return num_; }
  int denominator_l_power() const { return l_power_; }
  const std::map<int, int>& denominator_cyclotomic() const { return cyclo_; }
  /// Denominator expanded as an integer polynomial.
  IntPoly denominator_poly() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return l_power_ == 0 && cyclo_.empty(); }

  friend LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
  LocalizedPoly operator-() const;
  LocalizedPoly& operator+=(const LocalizedPoly& o) { return *this = *this + o; }
  LocalizedPoly& operator-=(const LocalizedPoly& o) { return *this = *this - o; }
  LocalizedPoly& operator*=(const LocalizedPoly& o) { return *this = *this * o; }

  /// Division by the declared units of the localization.
  LocalizedPoly divided_by_L(int a = 1) const;
  LocalizedPoly divided_by_tn_minus_1(int n) const;

  friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b);
  friend bool operator!=(const LocalizedPoly& a, const LocalizedPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void normalize();

  IntPoly num_;
  int l_power_ = 0;          // denominator L^a
  std::map<int, int> cyclo_; // denominator Phi_d(L)^{e_d}
};

/// Unit test for the localization: p is invertible iff it has the shape
/// +-L^a * prod Phi_d^{e_d}. On success the factorization witness is
/// reported (sign, a, and the Phi exponents) and `inverse` is the exact
/// inverse in the localized ring. Throws ArithmeticError on the zero
/// polynomial.
struct InvertibilityWitness {
  bool invertible = false;
  int sign = 1;
  int l_power = 0;
  std::map<int, int> cyclo_factors;
  LocalizedPoly inverse;
};
InvertibilityWitness is_invertible(const IntPoly& p);

/// L-linear combination of formal class symbols plus a constant part.
/// Products of two expressions with class terms are rejected: no formula in
/// scope ever multiplies two unknown classes.
class MotivicExpression {
 public:
  MotivicExpression() = default;
  static MotivicExpression constant(LocalizedPoly c);
  static MotivicExpression symbol(const std::string& name,
                                  LocalizedPoly coeff = LocalizedPoly::one());

  const LocalizedPoly& constant_part() const { return constant_; }
  const std::map<std::string, LocalizedPoly>& class_terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  friend MotivicExpression operator+(const MotivicExpression& a,
                                     const MotivicExpression& b);
  friend MotivicExpression operator-(const MotivicExpression& a,
                                     const MotivicExpression& b);
  /// Multiplication; throws InputError if both factors carry class terms.
  friend MotivicExpression operator*(const MotivicExpression& a,
                                     const MotivicExpression& b);

  MotivicExpression scaled(const LocalizedPoly& c) const;
  /// Replace a symbol by a constant value.
  MotivicExpression substituted(const std::string& name, const LocalizedPoly& v) const;

  friend bool operator==(const MotivicExpression& a, const MotivicExpression& b);

  nlohmann::json to_json() const;

 private:
  void prune();
  LocalizedPoly constant_;
  std::map<std::string, LocalizedPoly> terms_;
};

}  // namespace bstack

#endif
