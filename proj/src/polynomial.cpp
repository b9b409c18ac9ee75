#include "bstack/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "bstack/common.hpp"

namespace bstack {

IntPoly IntPoly::monomial(int degree, const BigInt& coeff) {
  if (degree < 0) fail("monomial: negative degree");
  if (coeff == 0) return IntPoly();
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::tn_minus_1(int n) {
  if (n < 0) fail("tn_minus_1: negative exponent");
  if (n == 0) return IntPoly();  // t^0 - 1 = 0
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c = c_;
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

bool IntPoly::divide_exact(const IntPoly& divisor, IntPoly& quotient) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<BigInt> r = c_;
  auto deg = [](const std::vector<BigInt>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
  };
  int dd = divisor.degree();
  const BigInt& lead = divisor.c_[dd];
  std::vector<BigInt> q(c_.size() > divisor.c_.size() ? c_.size() - divisor.c_.size() + 1 : 1,
                        BigInt(0));
  int dr = deg(r);
  while (dr >= dd) {
    if (r[dr] % lead != 0) return false;
    BigInt f = r[dr] / lead;
    int shift = dr - dd;
    q[shift] = f;
    for (int i = 0; i <= dd; ++i) r[shift + i] -= f * divisor.c_[i];
    dr = deg(r);
  }
  if (dr >= 0) return false;  // nonzero remainder
  quotient = IntPoly(std::move(q));
  return true;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[i];
    if (a == 0) continue;
    if (!first) out << (a > 0 ? " + " : " - ");
    else if (a < 0) out << "-";
    first = false;
    BigInt mag = abs(a);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

const IntPoly& cyclotomic_poly_z(int m) {
  static std::map<int, IntPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    IntPoly acc(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) acc *= cache.at(e);
    IntPoly q;
    if (!IntPoly::tn_minus_1(d).divide_exact(acc, q))
      fail("cyclotomic_poly_z: non-exact division");
    cache.emplace(d, std::move(q));
  }
  return cache.at(m);
}

}  // namespace bstack
