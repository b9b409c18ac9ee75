#ifndef BSTACK_POSET_HPP_
#define BSTACK_POSET_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bstack/polynomial.hpp"

namespace bstack {

/// Finite poset on elements 0..n-1 with a dense order relation.
/// The relation is validated (reflexive, antisymmetric, transitive) on
/// construction. Elements may carry a dimension label and a name.
class FinitePoset {
 public:
  FinitePoset(int n, std::vector<std::vector<bool>> leq);

  int size() const { return n_; }
  bool leq(int p, int q) const { return leq_[p][q]; }
  bool lt(int p, int q) const { return p != q && leq_[p][q]; }

  void set_dim(int p, int d) { dims_[p] = d; }
  int dim(int p) const { return dims_[p]; }
  bool has_dims() const;
  void set_name(int p, const std::string& s) { names_[p] = s; }
  const std::string& name(int p) const { return names_[p]; }

  /// Index of the unique minimum / maximum, or -1 if not unique.
  int unique_min() const;
  int unique_max() const;

  /// Elements of the closed interval [p, q].
  std::vector<int> interval(int p, int q) const;

  /// Covering relations (p, q) with p covered by q.
  std::vector<std::pair<int, int>> cover_relations() const;

 private:
  int n_;
  std::vector<std::vector<bool>> leq_;
  std::vector<int> dims_;
  std::vector<std::string> names_;
};

/// Full Mobius table of a poset, mu(p,q) for all p <= q.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& p);
  BigInt mu(int p, int q) const;
  /// mu(0-hat, q); requires a unique minimum.
  BigInt mu_from_min(int q) const;

 private:
  const FinitePoset* poset_;
  int min_;
  std::map<std::pair<int, int>, BigInt> table_;
};

/// Mobius values computed independently by inverting the zeta matrix with
/// exact rational elimination. Used as a cross-check against the recursion.
BigInt mobius_via_zeta(const FinitePoset& p, int a, int b);

/// A chain p1 < ... < pk, stored as the sorted element list.
using Chain = std::vector<int>;

/// All nonempty chains of the poset restricted to `allowed` elements.
std::vector<Chain> chains_in(const FinitePoset& p, const std::vector<int>& allowed);

/// All nonempty chains avoiding the unique minimum and maximum (the proper
/// part of the order complex). Requires unique extremes.
std::vector<Chain> proper_chains(const FinitePoset& p);

/// Signed chain count sum_{w in proper complex of [p,q]} (-1)^{|w|-1}, with
/// the empty chain counted as -1 so that the value equals mu(p,q) for every
/// p < q. For p == q the value is defined as 1, matching mu(p,p).
BigInt reduced_euler(const FinitePoset& p, int a, int b);

/// sum_x mu(0-hat, x) t^{dim x}; requires a unique minimum and dim labels.
IntPoly characteristic_polynomial(const FinitePoset& p);

/// Hasse diagram in DOT format; node labels "name (dim=k, mu=v)".
std::string to_dot(const FinitePoset& p, const std::string& graph_name = "poset");

}  // namespace bstack

#endif
