#include "bstack/motivic.hpp"

#include <sstream>

#include "bstack/common.hpp"

namespace bstack {

LocalizedPoly LocalizedPoly::L_power(int a) {
  if (a >= 0) return LocalizedPoly(IntPoly::monomial(a));
  LocalizedPoly r(IntPoly(1));
  r.l_power_ = -a;
  return r;
}

IntPoly LocalizedPoly::denominator_poly() const {
  IntPoly den = IntPoly::monomial(l_power_);
  for (const auto& [d, e] : cyclo_)
    for (int i = 0; i < e; ++i) den *= cyclotomic_poly_z(d);
  return den;
}

void LocalizedPoly::normalize() {
  if (num_.is_zero()) {
    l_power_ = 0;
    cyclo_.clear();
    return;
  }
  IntPoly l = IntPoly::monomial(1);
  while (l_power_ > 0) {
    IntPoly q;
    if (!num_.divide_exact(l, q)) break;
    num_ = std::move(q);
    --l_power_;
  }
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    const IntPoly& phi = cyclotomic_poly_z(it->first);
    while (it->second > 0) {
      IntPoly q;
      if (!num_.divide_exact(phi, q)) break;
      num_ = std::move(q);
      --it->second;
    }
    it = (it->second == 0) ? cyclo_.erase(it) : std::next(it);
  }
}

namespace {
// Least common denominator data for bringing two fractions together.
struct CommonDen {
  int l_power;
  std::map<int, int> cyclo;
};

CommonDen lcm_den(const LocalizedPoly& a, const LocalizedPoly& b) {
  CommonDen d;
  d.l_power = std::max(a.denominator_l_power(), b.denominator_l_power());
  d.cyclo = a.denominator_cyclotomic();
  for (const auto& [k, e] : b.denominator_cyclotomic())
    d.cyclo[k] = std::max(d.cyclo.count(k) ? d.cyclo[k] : 0, e);
  return d;
}

IntPoly cofactor(const LocalizedPoly& x, const CommonDen& d) {
  IntPoly co = IntPoly::monomial(d.l_power - x.denominator_l_power());
  for (const auto& [k, e] : d.cyclo) {
    auto it = x.denominator_cyclotomic().find(k);
    int have = it == x.denominator_cyclotomic().end() ? 0 : it->second;
    for (int i = 0; i < e - have; ++i) co *= cyclotomic_poly_z(k);
  }
  return co;
}
}  // namespace

LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b) {
  CommonDen d = lcm_den(a, b);
  LocalizedPoly r;
  r.num_ = a.num_ * cofactor(a, d) + b.num_ * cofactor(b, d);
  r.l_power_ = d.l_power;
  r.cyclo_ = d.cyclo;
  r.normalize();
  return r;
}

LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b) {
  return a + (-b);
}

LocalizedPoly LocalizedPoly::operator-() const {
  LocalizedPoly r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
  LocalizedPoly r;
  r.num_ = a.num_ * b.num_;
  r.l_power_ = a.l_power_ + b.l_power_;
  r.cyclo_ = a.cyclo_;
  for (const auto& [k, e] : b.cyclo_) r.cyclo_[k] += e;
  r.normalize();
  return r;
}

LocalizedPoly LocalizedPoly::divided_by_L(int a) const {
  if (a < 0) fail("divided_by_L: negative exponent");
  LocalizedPoly r = *this;
  r.l_power_ += a;
  r.normalize();
  return r;
}

LocalizedPoly LocalizedPoly::divided_by_tn_minus_1(int n) const {
  if (n < 1) fail("divided_by_tn_minus_1: n must be positive");
  LocalizedPoly r = *this;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++r.cyclo_[d];
  r.normalize();
  return r;
}

bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) {
  return a.num_ == b.num_ && a.l_power_ == b.l_power_ && a.cyclo_ == b.cyclo_;
}

std::string LocalizedPoly::to_string() const {
  std::ostringstream out;
  out << "(" << num_.to_string("L") << ")";
  if (l_power_ > 0 || !cyclo_.empty()) {
    out << " / (";
    bool first = true;
    if (l_power_ > 0) {
      out << "L^" << l_power_;
      first = false;
    }
    for (const auto& [d, e] : cyclo_) {
      if (!first) out << " * ";
      first = false;
      out << "Phi_" << d << "(L)";
      if (e > 1) out << "^" << e;
    }
    out << ")";
  }
  return out.str();
}

nlohmann::json LocalizedPoly::to_json() const {
  nlohmann::json j;
  nlohmann::json num = nlohmann::json::array();
  for (const auto& c : num_.coeffs()) num.push_back(c.get_str());
  j["num"] = num;  // ascending degree
  j["den_L"] = l_power_;
  nlohmann::json cyc = nlohmann::json::object();
  for (const auto& [d, e] : cyclo_) cyc[std::to_string(d)] = e;
  j["den_cyclotomic"] = cyc;
  return j;
}

InvertibilityWitness is_invertible(const IntPoly& p) {
  if (p.is_zero()) throw ArithmeticError("is_invertible: zero polynomial");
  InvertibilityWitness w;
  IntPoly rest = p;
  IntPoly l = IntPoly::monomial(1);
  while (rest.degree() > 0) {
    if (rest.coeff(0) == 0) {
      IntPoly q;
      if (!rest.divide_exact(l, q)) break;
      rest = std::move(q);
      ++w.l_power;
      continue;
    }
    bool found = false;
    // Phi_d can divide only if phi(d) <= deg; scanning d up to 2*deg^2 + 6
    // covers all d with phi(d) <= deg.
    int deg = rest.degree();
    for (int d = 1; d <= 2 * deg * deg + 6 && !found; ++d) {
      const IntPoly& phi = cyclotomic_poly_z(d);
      if (phi.degree() > deg) continue;
      IntPoly q;
      if (rest.divide_exact(phi, q)) {
        rest = std::move(q);
        ++w.cyclo_factors[d];
        found = true;
      }
    }
    if (!found) {
      w.invertible = false;
      return w;
    }
  }
  if (rest.degree() != 0) {
    w.invertible = false;
    return w;
  }
  BigInt c = rest.coeff(0);
  if (c != 1 && c != -1) {
    w.invertible = false;
    return w;
  }
  w.sign = (c == 1) ? 1 : -1;
  w.invertible = true;
  // Exact inverse: sign / (L^a * prod Phi_d^{e_d}).
  LocalizedPoly inv(w.sign);
  inv = inv.divided_by_L(w.l_power);
  for (const auto& [d, e] : w.cyclo_factors)
    for (int i = 0; i < e; ++i) {
      LocalizedPoly phi_inv(1);
      // dividing by Phi_d: multiply by (prod_{d'|d, d'<d} Phi_d') / (L^d - 1)
      LocalizedPoly num(1);
      for (int dd = 1; dd < d; ++dd)
        if (d % dd == 0) num *= LocalizedPoly(cyclotomic_poly_z(dd));
      phi_inv = num.divided_by_tn_minus_1(d);
      inv *= phi_inv;
    }
  w.inverse = inv;
  return w;
}

// ---------------------------------------------------------------------------
// MotivicExpression

MotivicExpression MotivicExpression::constant(LocalizedPoly c) {
  MotivicExpression e;
  e.constant_ = std::move(c);
  return e;
}

MotivicExpression MotivicExpression::symbol(const std::string& name,
                                            LocalizedPoly coeff) {
  MotivicExpression e;
  if (!coeff.is_zero()) e.terms_[name] = std::move(coeff);
  return e;
}

void MotivicExpression::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

MotivicExpression operator+(const MotivicExpression& a, const MotivicExpression& b) {
  MotivicExpression r = a;
  r.constant_ += b.constant_;
  for (const auto& [s, c] : b.terms_) {
    auto it = r.terms_.find(s);
    if (it == r.terms_.end())
      r.terms_[s] = c;
    else
      it->second += c;
  }
  r.prune();
  return r;
}

MotivicExpression operator-(const MotivicExpression& a, const MotivicExpression& b) {
  return a + b.scaled(LocalizedPoly(-1));
}

MotivicExpression operator*(const MotivicExpression& a, const MotivicExpression& b) {
  if (!a.is_constant() && !b.is_constant())
    throw InputError("products of class symbols are not supported");
  if (a.is_constant()) return b.scaled(a.constant_);
  return a.scaled(b.constant_);
}

MotivicExpression MotivicExpression::scaled(const LocalizedPoly& c) const {
  MotivicExpression r;
  r.constant_ = constant_ * c;
  for (const auto& [s, coeff] : terms_) r.terms_[s] = coeff * c;
  r.prune();
  return r;
}

MotivicExpression MotivicExpression::substituted(const std::string& name,
                                                 const LocalizedPoly& v) const {
  MotivicExpression r = *this;
  auto it = r.terms_.find(name);
  if (it == r.terms_.end()) return r;
  r.constant_ += it->second * v;
  r.terms_.erase(it);
  return r;
}

bool operator==(const MotivicExpression& a, const MotivicExpression& b) {
  return a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

nlohmann::json MotivicExpression::to_json() const {
  nlohmann::json j;
  j["constant"] = constant_.to_json();
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [s, c] : terms_) terms[s] = c.to_json();
  j["class_terms"] = terms;
  return j;
}

}  // namespace bstack
