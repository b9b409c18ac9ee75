// Test-only oracles, kept independent of the library's implementation paths.
#ifndef BSTACK_TESTS_HELPERS_HPP_
#define BSTACK_TESTS_HELPERS_HPP_

#include <map>
#include <random>
#include <set>
#include <vector>

#include "bstack/group.hpp"
#include "bstack/matrix.hpp"
#include "bstack/poset.hpp"

namespace bstack_tests {

using namespace bstack;

// Brute-force closure by repeated pairwise products (no BFS, no parent
// decomposition); returns the set of canonical matrix keys.
inline std::set<std::string> brute_closure_keys(const std::vector<Matrix>& gens) {
  long long m = 1;
  for (const auto& g : gens) m = lcm_ll(m, g.entry_order_lcm());
  std::map<std::string, Matrix> elems;
  Matrix id = Matrix::identity(gens[0].rows()).embedded(static_cast<int>(m));
  elems.emplace(id.key(), id);
  for (const auto& g : gens) {
    Matrix e = g.embedded(static_cast<int>(m));
    elems.emplace(e.key(), e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Matrix> snapshot;
    for (const auto& [k, v] : elems) snapshot.push_back(v);
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        Matrix p = a * b;
        if (elems.emplace(p.key(), p).second) grew = true;
      }
  }
  std::set<std::string> keys;
  for (const auto& [k, v] : elems) keys.insert(k);
  return keys;
}

// Normalizer scan straight from the definition, conjugating matrices rather
// than going through the multiplication table.
inline std::vector<int> brute_normalizer(const GroupPtr& g, const Subgroup& h) {
  std::set<std::string> h_keys;
  for (int m : h.members) h_keys.insert(g->element(m).key());
  std::vector<int> result;
  for (int x = 0; x < g->order(); ++x) {
    Matrix xm = g->element(x);
    Matrix xinv = xm.inverse();
    bool ok = true;
    for (int m : h.members) {
      Matrix conj = xm * g->element(m) * xinv;
      if (!h_keys.count(conj.key())) { ok = false; break; }
    }
    if (ok) result.push_back(x);
  }
  return result;
}

// Mobius function by the textbook recursion, written against the poset API
// only (no zeta matrices, no shared code with MobiusTable's fill order).
inline long long mobius_recursion(const FinitePoset& p, int a, int b) {
  if (a == b) return 1;
  long long s = 0;
  for (int r : p.interval(a, b))
    if (r != b) s += mobius_recursion(p, a, r);
  return -s;
}

// Random small rational.
inline Rational random_rational(std::mt19937& rng, int bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline CyclotomicNumber random_cyclotomic(std::mt19937& rng, int m) {
  std::vector<Rational> coeffs(euler_phi(m));
  for (auto& c : coeffs) c = random_rational(rng);
  return CyclotomicNumber::from_powers(m, coeffs);
}

inline Matrix random_rational_matrix(std::mt19937& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = CyclotomicNumber(random_rational(rng));
  return m;
}

}  // namespace bstack_tests

#endif
