#include <doctest.h>

#include "bstack/cyclotomic.hpp"
#include "helpers.hpp"

using namespace bstack;

TEST_CASE("rational arithmetic and parsing") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(3).to_string() == "3/1");
  CHECK_THROWS_AS(Rational(1, 1) / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
}

TEST_CASE("zeta3 relation: z + z^2 = -1") {
  CyclotomicNumber z = CyclotomicNumber::zeta(3);
  CHECK(z + z * z == CyclotomicNumber(Rational(-1)));
}

TEST_CASE("zeta4 relation: z * z = -1") {
  CyclotomicNumber z = CyclotomicNumber::zeta(4);
  CHECK(z * z == CyclotomicNumber(Rational(-1)));
}

TEST_CASE("inverse: (1 + zeta5) * (1 + zeta5)^-1 = 1") {
  CyclotomicNumber z = CyclotomicNumber::zeta(5);
  CyclotomicNumber x = CyclotomicNumber(Rational(1)) + z;
  CHECK(x * x.inverse() == CyclotomicNumber(Rational(1)));
}

TEST_CASE("division by zero is a distinct arithmetic error") {
  CyclotomicNumber z = CyclotomicNumber::zeta(5);
  CHECK_THROWS_AS(z / CyclotomicNumber(), ArithmeticError);
}

TEST_CASE("conjugation") {
  CyclotomicNumber z4 = CyclotomicNumber::zeta(4);
  CHECK(z4.conjugate() == -z4);
  CyclotomicNumber r{Rational(7, 3)};
  CHECK(r.conjugate() == r);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 3 + static_cast<int>(rng() % 10);
    CyclotomicNumber x = bstack_tests::random_cyclotomic(rng, m);
    CHECK(x.conjugate().conjugate() == x);
  }
}

TEST_CASE("primitive roots") {
  CHECK(CyclotomicNumber::zeta(1) == CyclotomicNumber(Rational(1)));
  CHECK(CyclotomicNumber::zeta(2) == CyclotomicNumber(Rational(-1)));
  // Repeated multiplication oracle for zeta6^3 = -1.
  CyclotomicNumber z6 = CyclotomicNumber::zeta(6);
  CyclotomicNumber cube = z6 * z6 * z6;
  CHECK(cube == CyclotomicNumber(Rational(-1)));
}

TEST_CASE("primitive_root(m) has multiplicative order exactly m, m <= 24") {
  for (int m = 1; m <= 24; ++m) {
    CyclotomicNumber z = CyclotomicNumber::zeta(m);
    CyclotomicNumber one{Rational(1)};
    CyclotomicNumber pow = one;
    for (int k = 1; k < m; ++k) {
      pow = pow * z;
      CHECK(pow != one);
    }
    pow = pow * z;
    CHECK(pow == one);
    CHECK(z.multiplicative_order() == m);
  }
}

TEST_CASE("field axioms on randomized triples, m <= 24") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng() % 24);
    CyclotomicNumber a = bstack_tests::random_cyclotomic(rng, m);
    CyclotomicNumber b = bstack_tests::random_cyclotomic(rng, m);
    CyclotomicNumber c = bstack_tests::random_cyclotomic(rng, m);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicNumber(Rational(1)));
    CHECK(a + (-a) == CyclotomicNumber());
  }
}

TEST_CASE("embedding compatibility: embed-then-add equals add-then-embed") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 1 + static_cast<int>(rng() % 12);
    int k = (trial % 2 == 0) ? 2 : 3;
    CyclotomicNumber a = bstack_tests::random_cyclotomic(rng, m);
    CyclotomicNumber b = bstack_tests::random_cyclotomic(rng, m);
    CHECK((a + b).embedded(k * m) == a.embedded(k * m) + b.embedded(k * m));
    CHECK((a * b).embedded(k * m) == a.embedded(k * m) * b.embedded(k * m));
  }
}

TEST_CASE("mixed-order arithmetic embeds into the lcm field") {
  CyclotomicNumber z6 = CyclotomicNumber::zeta(6);
  CyclotomicNumber z3 = CyclotomicNumber::zeta(3);
  CHECK(z6 * z6 == z3);  // zeta6^2 = zeta3
  CHECK(z6.pow(3) == CyclotomicNumber(Rational(-1)));
  CyclotomicNumber z4 = CyclotomicNumber::zeta(4);
  CHECK((z4 * z3).multiplicative_order() == 12);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
}
