#include "bstack/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bstack/common.hpp"
#include "bstack/matrix.hpp"

namespace bstack {

FinitePoset::FinitePoset(int n, std::vector<std::vector<bool>> leq)
    : n_(n), leq_(std::move(leq)), dims_(n, -1), names_(n) {
  if (static_cast<int>(leq_.size()) != n) fail("poset: relation size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq_[i].size()) != n) fail("poset: relation size mismatch");
    if (!leq_[i][i]) fail("poset: relation not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) fail("poset: relation not antisymmetric");
      if (leq_[i][j])
        for (int k = 0; k < n; ++k)
          if (leq_[j][k] && !leq_[i][k]) fail("poset: relation not transitive");
    }
  for (int i = 0; i < n; ++i) names_[i] = "x" + std::to_string(i);
}

bool FinitePoset::has_dims() const {
  for (int d : dims_)
    if (d < 0) return false;
  return true;
}

int FinitePoset::unique_min() const {
  int found = -1;
  for (int i = 0; i < n_; ++i) {
    bool below_all = true;
    for (int j = 0; j < n_; ++j)
      if (!leq_[i][j]) { below_all = false; break; }
    if (below_all) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

int FinitePoset::unique_max() const {
  int found = -1;
  for (int i = 0; i < n_; ++i) {
    bool above_all = true;
    for (int j = 0; j < n_; ++j)
      if (!leq_[j][i]) { above_all = false; break; }
    if (above_all) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

std::vector<int> FinitePoset::interval(int p, int q) const {
  std::vector<int> r;
  for (int i = 0; i < n_; ++i)
    if (leq_[p][i] && leq_[i][q]) r.push_back(i);
  return r;
}

std::vector<std::pair<int, int>> FinitePoset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q) {
      if (!lt(p, q)) continue;
      bool covered = true;
      for (int r = 0; r < n_; ++r)
        if (lt(p, r) && lt(r, q)) { covered = false; break; }
      if (covered) covers.emplace_back(p, q);
    }
  return covers;
}

MobiusTable::MobiusTable(const FinitePoset& p) : poset_(&p) {
  min_ = p.unique_min();
  int n = p.size();
  // mu(a,b) = -sum_{a <= r < b} mu(a,r), filled by increasing interval size.
  for (int a = 0; a < n; ++a) {
    // Order the elements above a by number of elements in [a, x].
    std::vector<int> above;
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b)) above.push_back(b);
    std::stable_sort(above.begin(), above.end(), [&](int x, int y) {
      return p.interval(a, x).size() < p.interval(a, y).size();
    });
    for (int b : above) {
      if (b == a) {
        table_[{a, a}] = 1;
        continue;
      }
      BigInt s = 0;
      for (int r : p.interval(a, b))
        if (r != b) s += table_.at({a, r});
      table_[{a, b}] = -s;
    }
  }
}

BigInt MobiusTable::mu(int p, int q) const {
  auto it = table_.find({p, q});
  if (it == table_.end()) fail("mobius: incomparable pair");
  return it->second;
}

BigInt MobiusTable::mu_from_min(int q) const {
  if (min_ < 0) fail("mobius: poset has no unique minimum");
  return mu(min_, q);
}

BigInt mobius_via_zeta(const FinitePoset& p, int a, int b) {
  if (!p.leq(a, b)) fail("mobius_via_zeta: incomparable pair");
  int n = p.size();
  Matrix zeta(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) zeta.at(i, j) = CyclotomicNumber(Rational(1));
  Matrix inv = zeta.inverse();
  Rational v = inv.at(a, b).rational_value();
  if (!v.is_integer()) fail("mobius_via_zeta: non-integer entry");
  return v.num();
}

std::vector<Chain> chains_in(const FinitePoset& p, const std::vector<int>& allowed) {
  // Sort by a linear extension so every chain is an increasing index sequence.
  std::vector<int> sorted = allowed;
  std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) {
    int cx = 0, cy = 0;
    for (int i = 0; i < p.size(); ++i) {
      if (p.leq(i, x)) ++cx;
      if (p.leq(i, y)) ++cy;
    }
    return cx < cy;
  });
  std::vector<Chain> result;
  Chain cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    for (size_t i = start; i < sorted.size(); ++i) {
      int x = sorted[i];
      if (!cur.empty() && !p.lt(cur.back(), x)) continue;
      cur.push_back(x);
      result.push_back(cur);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return result;
}

std::vector<Chain> proper_chains(const FinitePoset& p) {
  int lo = p.unique_min(), hi = p.unique_max();
  if (lo < 0 || hi < 0) fail("proper_chains: poset lacks unique extremes");
  std::vector<int> allowed;
  for (int i = 0; i < p.size(); ++i)
    if (i != lo && i != hi) allowed.push_back(i);
  return chains_in(p, allowed);
}

BigInt reduced_euler(const FinitePoset& p, int a, int b) {
  if (!p.leq(a, b)) fail("reduced_euler: incomparable pair");
  if (a == b) return 1;
  std::vector<int> allowed;
  for (int x : p.interval(a, b))
    if (x != a && x != b) allowed.push_back(x);
  // Empty chain contributes (-1)^{0-1} = -1.
  BigInt total = -1;
  for (const Chain& c : chains_in(p, allowed))
    total += (c.size() % 2 == 1) ? 1 : -1;
  return total;
}

IntPoly characteristic_polynomial(const FinitePoset& p) {
  if (!p.has_dims()) fail("characteristic_polynomial: missing dim labels");
  int lo = p.unique_min();
  if (lo < 0) fail("characteristic_polynomial: no unique minimum");
  MobiusTable mt(p);
  IntPoly chi;
  for (int x = 0; x < p.size(); ++x)
    if (p.leq(lo, x)) chi += IntPoly::monomial(p.dim(x), mt.mu(lo, x));
  return chi;
}

std::string to_dot(const FinitePoset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=BT;\n";
  int lo = p.unique_min();
  MobiusTable table(p);
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << p.name(i);
    out << " (dim=" << (p.dim(i) >= 0 ? std::to_string(p.dim(i)) : "?");
    if (lo >= 0 && p.leq(lo, i)) out << ", mu=" << table.mu(lo, i).get_str();
    out << ")\"];\n";
  }
  for (auto [a, b] : p.cover_relations())
    out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bstack
