#include <doctest.h>

#include <algorithm>

#include "bstack/poset.hpp"
#include "helpers.hpp"

using namespace bstack;

namespace {

FinitePoset chain_poset(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return FinitePoset(n, leq);
}

// Boolean lattice on subsets of {0..k-1}, ordered by inclusion.
FinitePoset boolean_lattice(int k) {
  int n = 1 << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = ((a & b) == a);
  return FinitePoset(n, leq);
}

// Partition lattice Pi_3: bottom, three atoms, top.
FinitePoset partition_lattice_3() {
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int a = 1; a <= 3; ++a) {
    leq[0][a] = true;
    leq[a][4] = true;
  }
  leq[0][4] = true;
  return FinitePoset(n, leq);
}

void check_all_intervals(const FinitePoset& p) {
  MobiusTable mt(p);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      BigInt mu = mt.mu(a, b);
      CHECK(mu == mobius_via_zeta(p, a, b));
      CHECK(mu == reduced_euler(p, a, b));
      CHECK(mu == BigInt(static_cast<long>(bstack_tests::mobius_recursion(p, a, b))));
    }
}

}  // namespace

TEST_CASE("poset validation rejects bad relations") {
  std::vector<std::vector<bool>> not_reflexive = {{false}};
  CHECK_THROWS(FinitePoset(1, not_reflexive));
  std::vector<std::vector<bool>> not_antisym = {{true, true}, {true, true}};
  CHECK_THROWS(FinitePoset(2, not_antisym));
  // 0 <= 1, 1 <= 2, but 0 !<= 2.
  std::vector<std::vector<bool>> not_transitive = {
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS(FinitePoset(3, not_transitive));
}

TEST_CASE("mobius on the 3-chain") {
  FinitePoset p = chain_poset(3);
  MobiusTable mt(p);
  CHECK(mt.mu(0, 0) == 1);
  CHECK(mt.mu(0, 1) == -1);
  CHECK(mt.mu(0, 2) == 0);
}

TEST_CASE("mobius on the boolean lattice B3") {
  FinitePoset p = boolean_lattice(3);
  MobiusTable mt(p);
  CHECK(mt.mu(0, 7) == -1);  // (-1)^3
  CHECK(mt.mu(0, 3) == 1);
  CHECK(mt.mu(0, 1) == -1);
}

TEST_CASE("mobius on the partition lattice Pi_3") {
  FinitePoset p = partition_lattice_3();
  MobiusTable mt(p);
  CHECK(mt.mu(0, 4) == 2);  // recursion oracle on the 5-element lattice
}

TEST_CASE("proper chains") {
  CHECK(proper_chains(chain_poset(2)).empty());
  auto chains = proper_chains(chain_poset(3));
  REQUIRE(chains.size() == 1);
  CHECK(chains[0] == Chain{1});

  // B3 proper part is a hexagon: 6 vertices and 6 edges.
  auto hex = proper_chains(boolean_lattice(3));
  int vertices = 0, edges = 0;
  for (const auto& c : hex) {
    if (c.size() == 1) ++vertices;
    if (c.size() == 2) ++edges;
  }
  CHECK(vertices == 6);
  CHECK(edges == 6);
  CHECK(hex.size() == 12);
}

TEST_CASE("reduced Euler characteristic equals mobius") {
  FinitePoset chain3 = chain_poset(3);
  CHECK(reduced_euler(chain3, 0, 1) == -1);  // covering pair: empty complex
  CHECK(reduced_euler(chain3, 0, 2) == 0);
  FinitePoset b3 = boolean_lattice(3);
  CHECK(reduced_euler(b3, 0, 7) == -1);  // hexagon
  CHECK_THROWS(reduced_euler(b3, 1, 2));  // incomparable
}

TEST_CASE("mobius = zeta inverse = reduced Euler, exhaustively") {
  check_all_intervals(chain_poset(4));
  check_all_intervals(boolean_lattice(3));
  check_all_intervals(partition_lattice_3());
}

TEST_CASE("mobius values over a poset with a maximum sum to zero") {
  for (const FinitePoset& p :
       {chain_poset(4), boolean_lattice(3), partition_lattice_3()}) {
    MobiusTable mt(p);
    BigInt total = 0;
    for (int x = 0; x < p.size(); ++x) total += mt.mu(p.unique_min(), x);
    CHECK(total == 0);
  }
}

TEST_CASE("characteristic polynomial of a single hyperplane in k^2") {
  // Two-element lattice: V (dim 2) above... ordered by reverse inclusion,
  // so V is the minimum and the hyperplane (dim 1) the other element.
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  FinitePoset p(2, leq);
  p.set_dim(0, 2);
  p.set_dim(1, 1);
  IntPoly chi = characteristic_polynomial(p);
  CHECK(chi == IntPoly(std::vector<BigInt>{0, -1, 1}));  // t^2 - t
}

TEST_CASE("characteristic polynomial needs dim labels") {
  FinitePoset p = chain_poset(2);
  CHECK_THROWS(characteristic_polynomial(p));
}

TEST_CASE("DOT export lists nodes and cover edges") {
  FinitePoset p = boolean_lattice(2);
  for (int i = 0; i < 4; ++i) p.set_dim(i, i == 0 ? 2 : (i == 3 ? 0 : 1));
  std::string dot = to_dot(p, "b2");
  CHECK(dot.find("digraph b2") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);  // 4 cover edges
  CHECK(dot.find("mu=") != std::string::npos);
}
