#include <doctest.h>

#include "bstack/matrix.hpp"
#include "helpers.hpp"

using namespace bstack;

namespace {
Matrix from_ints(int rows, int cols, const std::vector<long>& v) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = CyclotomicNumber(Rational(v[r * cols + c]));
  return m;
}
}  // namespace

TEST_CASE("rref basics") {
  int rank = 0;
  Matrix id3 = Matrix::identity(3);
  CHECK(rref(id3, &rank) == id3);
  CHECK(rank == 3);

  Matrix zero = from_ints(2, 2, {0, 0, 0, 0});
  rref(zero, &rank);
  CHECK(rank == 0);

  Matrix dep = from_ints(2, 2, {1, 1, 2, 2});
  Matrix red = rref(dep, &rank);
  CHECK(rank == 1);
  CHECK(red.at(0, 0) == CyclotomicNumber(Rational(1)));
  CHECK(red.at(0, 1) == CyclotomicNumber(Rational(1)));
}

TEST_CASE("kernel examples") {
  Matrix id2 = Matrix::identity(2);
  CHECK(kernel(id2 - id2).dim() == 2);

  Matrix swap = from_ints(2, 2, {0, 1, 1, 0});
  Subspace line = kernel(swap - id2);
  CHECK(line.dim() == 1);
  CHECK(line.basis().at(0, 0) == CyclotomicNumber(Rational(1)));
  CHECK(line.basis().at(0, 1) == CyclotomicNumber(Rational(1)));

  // Rotation of order 3: direct elimination gives a trivial kernel
  // (det(R - I) = 3 != 0).
  Matrix rot = from_ints(2, 2, {0, -1, 1, -1});
  CHECK(kernel(rot - id2).dim() == 0);
}

TEST_CASE("intersection examples") {
  Subspace e1 = Subspace::span(2, from_ints(1, 2, {1, 0}));
  Subspace e2 = Subspace::span(2, from_ints(1, 2, {0, 1}));
  CHECK(intersect(e1, e2).dim() == 0);
  CHECK(intersect(e1, e1) == e1);

  // Fixed lines of the two simple reflections in the essential S3 plane
  // (elimination oracle: y = 2x and x = 2y only meet at the origin).
  Matrix s1 = from_ints(2, 2, {-1, 1, 0, 1});
  Matrix s2 = from_ints(2, 2, {1, 0, 1, -1});
  Matrix id2 = Matrix::identity(2);
  Subspace f1 = kernel(s1 - id2);
  Subspace f2 = kernel(s2 - id2);
  CHECK(f1.dim() == 1);
  CHECK(f2.dim() == 1);
  CHECK(intersect(f1, f2).dim() == 0);

  Subspace mismatch = Subspace::full(3);
  CHECK_THROWS_AS(intersect(e1, mismatch), InputError);
}

TEST_CASE("containment") {
  Subspace full = Subspace::full(3);
  Subspace zero = Subspace::zero(3);
  Subspace line = Subspace::span(3, from_ints(1, 3, {1, 2, 3}));
  CHECK(contains(full, line));
  CHECK(contains(full, zero));
  CHECK_FALSE(contains(zero, line));
  CHECK(contains(line, intersect(line, full)));
  CHECK_THROWS_AS(contains(line, Subspace::full(2)), InputError);
}

TEST_CASE("rref is idempotent and kernels annihilate, randomized") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    Matrix m = bstack_tests::random_rational_matrix(rng, rows, cols);
    int r1 = 0, r2 = 0;
    Matrix red = rref(m, &r1);
    CHECK(rref(red, &r2) == red);
    CHECK(r1 == r2);
    Subspace ker = kernel(m);
    CHECK(ker.dim() == cols - r1);
    for (int i = 0; i < ker.dim(); ++i) {
      std::vector<CyclotomicNumber> v(cols);
      for (int c = 0; c < cols; ++c) v[c] = ker.basis().at(i, c);
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("two spanning sets of the same space canonicalize identically") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % dim);
    Matrix basis = bstack_tests::random_rational_matrix(rng, k, dim);
    Subspace s = Subspace::span(dim, basis);
    // Random row operations produce another spanning set of the same space.
    Matrix mixed(2 * k, dim);
    for (int i = 0; i < k; ++i) {
      Rational a = bstack_tests::random_rational(rng);
      Rational b(1 + static_cast<int>(rng() % 3));
      int j = static_cast<int>(rng() % k);
      for (int c = 0; c < dim; ++c) {
        mixed.at(i, c) = basis.at(i, c) * CyclotomicNumber(b);
        mixed.at(k + i, c) =
            basis.at(i, c) + basis.at(j, c) * CyclotomicNumber(a);
      }
    }
    CHECK(Subspace::span(dim, mixed) == s);
  }
}

TEST_CASE("modular law of dimensions on random pairs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 4);  // ambient <= 5
    Matrix ma = bstack_tests::random_rational_matrix(
        rng, 1 + static_cast<int>(rng() % dim), dim);
    Matrix mb = bstack_tests::random_rational_matrix(
        rng, 1 + static_cast<int>(rng() % dim), dim);
    Subspace a = Subspace::span(dim, ma);
    Subspace b = Subspace::span(dim, mb);
    CHECK(intersect(a, b).dim() + join(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("matrix inverse") {
  Matrix s1 = from_ints(2, 2, {-1, 1, 0, 1});
  CHECK(s1 * s1.inverse() == Matrix::identity(2));
  Matrix singular = from_ints(2, 2, {1, 1, 2, 2});
  CHECK_THROWS(singular.inverse());
}

TEST_CASE("cyclotomic matrix arithmetic stays exact") {
  CyclotomicNumber z = CyclotomicNumber::zeta(5);
  Matrix m(2, 2);
  m.at(0, 0) = z;
  m.at(0, 1) = CyclotomicNumber(Rational(1));
  m.at(1, 1) = z.inverse();
  Matrix inv = m.inverse();
  CHECK(m * inv == Matrix::identity(2));
  CHECK(kernel(m).dim() == 0);
}
