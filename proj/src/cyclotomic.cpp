#include "bstack/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bstack {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

int euler_phi(int m) {
  if (m <= 0) fail("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division with remainder; divisor need not be monic.
void divmod(const Poly& a, const Poly& d, Poly& q, Poly& r) {
  if (d.empty()) throw ArithmeticError("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() > d.size() ? r.size() - d.size() + 1 : 1, Rational(0));
  const Rational lead = d.back();
  while (r.size() >= d.size() && !r.empty()) {
    Rational f = r.back() / lead;
    size_t shift = r.size() - d.size();
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    trim(r);
  }
  trim(q);
}

Poly mod(const Poly& a, const Poly& d) {
  Poly q, r;
  divmod(a, d, q, r);
  return r;
}

// Inverse of a modulo f (f irreducible over Q), via extended Euclid.
Poly inverse_mod(const Poly& a, const Poly& f) {
  Poly r0 = f, r1 = mod(a, f);
  if (r1.empty()) throw ArithmeticError("cyclotomic division by zero");
  Poly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r2;
    divmod(r0, r1, q, r2);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd, a nonzero constant since f is irreducible and a != 0 mod f.
  if (r0.size() != 1) fail("inverse_mod: gcd not constant (corrupt modulus?)");
  Poly inv = s0;
  for (auto& c : inv) c /= r0[0];
  return mod(inv, f);
}

std::vector<int> divisors(int m) {
  std::vector<int> ds;
  for (int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      ds.push_back(d);
      if (d != m / d) ds.push_back(m / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

const std::vector<Rational>& cyclotomic_poly(int m) {
  static std::map<int, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Compute iteratively so every proper divisor is in the cache first.
  for (int d : divisors(m)) {
    if (cache.count(d)) continue;
    Poly xn_minus_1(d + 1, Rational(0));
    xn_minus_1[0] = Rational(-1);
    xn_minus_1[d] = Rational(1);
    Poly acc = {Rational(1)};
    for (int e : divisors(d))
      if (e != d) acc = mul(acc, cache.at(e));
    Poly q, r;
    divmod(xn_minus_1, acc, q, r);
    if (!r.empty()) fail("cyclotomic_poly: non-exact division");
    cache.emplace(d, std::move(q));
  }
  return cache.at(m);
}

CyclotomicNumber CyclotomicNumber::from_powers(int m, const std::vector<Rational>& coeffs) {
  if (m < 1) fail("from_powers: order must be >= 1");
  Poly p = coeffs;
  trim(p);
  p = mod(p, cyclotomic_poly(m));
  // Rational values (zero included) always live in Q(zeta_1); this keeps the
  // representation of a value independent of the arithmetic route to it.
  if (p.size() <= 1) return CyclotomicNumber(p.empty() ? Rational(0) : p[0]);
  p.resize(euler_phi(m), Rational(0));
  return CyclotomicNumber(m, std::move(p));
}

CyclotomicNumber CyclotomicNumber::zeta(int m) {
  if (m < 1) fail("zeta: order must be >= 1");
  std::vector<Rational> p(2, Rational(0));
  p[1] = Rational(1);
  return from_powers(m, p);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) fail("rational_value: not a rational number");
  return c_[0];
}

namespace {
// Coefficients of the value rewritten as a polynomial in zeta_M.
std::vector<Rational> spread_to(const CyclotomicNumber& x, int M) {
  if (M % x.order() != 0) fail("spread_to: target order not a multiple");
  int step = M / x.order();
  std::vector<Rational> p(static_cast<size_t>(x.coeffs().size() - 1) * step + 1,
                          Rational(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i) p[i * step] = x.coeffs()[i];
  return p;
}
}  // namespace

CyclotomicNumber CyclotomicNumber::embedded(int M) const {
  if (M == order_) return *this;
  return from_powers(M, spread_to(*this, M));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) {
    CyclotomicNumber r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    if (r.order_ > 1 && r.is_rational()) return CyclotomicNumber(r.c_[0]);
    return r;
  }
  int M = static_cast<int>(lcm_ll(a.order_, b.order_));
  return CyclotomicNumber::from_powers(M, add(spread_to(a, M), spread_to(b, M)));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_)
    return CyclotomicNumber::from_powers(a.order_, mul(a.c_, b.c_));
  int M = static_cast<int>(lcm_ll(a.order_, b.order_));
  return CyclotomicNumber::from_powers(M, mul(spread_to(a, M), spread_to(b, M)));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a * b.inverse();
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ArithmeticError("cyclotomic division by zero");
  if (is_rational()) return CyclotomicNumber(c_[0].inverse());
  Poly inv = inverse_mod(c_, cyclotomic_poly(order_));
  return from_powers(order_, inv);
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber base = *this;
  CyclotomicNumber r{Rational(1)};
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  if (order_ <= 2) return *this;
  // zeta^i -> zeta^{i(m-1) mod m}; exponent arithmetic is valid mod m.
  std::vector<Rational> p(order_, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    p[(i * (order_ - 1)) % order_] += c_[i];
  return from_powers(order_, p);
}

long CyclotomicNumber::multiplicative_order(long cap) const {
  if (is_zero()) return 0;
  CyclotomicNumber one{Rational(1)};
  CyclotomicNumber x = *this;
  for (long k = 1; k <= cap; ++k) {
    if (x == one) return k;
    x = x * *this;
  }
  return 0;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int M = static_cast<int>(lcm_ll(a.order_, b.order_));
  return a.embedded(M).c_ == b.embedded(M).c_;
}

std::string CyclotomicNumber::key() const {
  std::string s = std::to_string(order_) + ":";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].to_string();
  }
  return s;
}

std::string CyclotomicNumber::pretty() const {
  if (is_rational()) return c_[0].pretty();
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c_[0].pretty();
    } else {
      out << c_[i].pretty() << "*z" << order_ << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace bstack
