#ifndef BSTACK_GROUP_HPP_
#define BSTACK_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bstack/matrix.hpp"

namespace bstack {

class GroupRep;
using GroupPtr = std::shared_ptr<const GroupRep>;

/// Finite group presented only through its multiplication table
/// (element 0 is the identity). Used for quotients and for
/// isomorphism-level bookkeeping.
struct AbstractGroup {
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(table.size()); }
  int mult(int i, int j) const { return table[i][j]; }
  int inverse(int i) const;
  long element_order(int i) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<std::vector<int>> element_classes() const;
  int center_order() const;
  int derived_subgroup_order() const;
  std::vector<int> subgroup_closure(const std::vector<int>& seed) const;
  /// Deterministic small generating sequence.
  std::vector<int> generating_sequence() const;
  /// Isomorphism-invariant summary string. Equal fingerprints are a
  /// necessary condition for isomorphism, never treated as sufficient.
  std::string fingerprint() const;
};

/// Explicit isomorphism A -> B as an index map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const AbstractGroup& a,
                                                 const AbstractGroup& b);
bool isomorphic(const AbstractGroup& a, const AbstractGroup& b);

constexpr int kDefaultClosureCap = 20000;

/// Fully enumerated finite matrix group. Elements are stored in BFS layer
/// order (ties broken by canonical matrix serialization), so closure of the
/// same generator set is deterministic. All entries live in a single
/// common field Q(zeta_M), which makes matrix keys canonical.
class GroupRep {
 public:
  /// Breadth-first closure of invertible generators; throws when the closure
  /// exceeds `cap` ("group too large or infinite").
  static GroupPtr close(const std::vector<Matrix>& generators,
                        int cap = kDefaultClosureCap, const std::string& name = "");
  /// Group from an already-closed element list (e.g. a subgroup), re-closed
  /// from a greedily chosen generating set for canonical ordering.
  static GroupPtr from_elements(const std::vector<Matrix>& elements,
                                int cap = kDefaultClosureCap,
                                const std::string& name = "");

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(elems_.size()); }
  /// zeta-order of the coefficient field: lcm of the entry orders and the
  /// group exponent (so the field contains all needed roots of unity).
  int field_order() const { return field_order_; }
  long exponent() const { return exponent_; }
  const std::string& name() const { return name_; }

  const Matrix& element(int i) const { return elems_[i]; }
  const std::vector<int>& generators() const { return generators_; }
  int index_of(const Matrix& m) const;
  int mult(int i, int j) const;
  int inverse(int i) const { return inverse_[i]; }
  long element_order(int i) const { return elt_order_[i]; }
  int conjugate(int g, int x) const { return mult(mult(g, x), inverse(g)); }
  int power(int i, long e) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& element_classes() const;

  AbstractGroup abstract() const;

 private:
  GroupRep() = default;
  void finish_closure(int cap);

  int dim_ = 0;
  int field_order_ = 1;
  int entry_order_ = 1;  // common representation field of all entries
  long exponent_ = 1;
  std::string name_;
  std::vector<Matrix> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> lgen_;        // lgen_[g][x] = gen_g * x
  std::vector<int> parent_gen_, parent_elem_; // x = gen * parent for x > 0
  std::vector<std::vector<int>> mult_;        // full table (built when small)
  std::vector<int> inverse_;
  std::vector<long> elt_order_;
  mutable std::vector<std::vector<int>> classes_;  // element conjugacy classes
};

/// Subgroup as a sorted member index set of a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, includes 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int idx) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  std::string key() const;
  /// The subgroup as a matrix group in its own right.
  GroupPtr as_group(const std::string& name = "") const;
  AbstractGroup abstract() const;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members);

/// Smallest subgroup containing the seed indices.
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seed);

/// {g : g H g^-1 = H}, by scanning all elements.
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);

/// Simultaneous normalizer of a chain of subgroups (intersection of the
/// members' normalizers). The flag must be totally ordered by inclusion;
/// otherwise throws InputError("non-chain input").
Subgroup flag_normalizer(const GroupPtr& g, const std::vector<Subgroup>& flag);

/// g x g^-1 applied member-wise.
Subgroup conjugate_subgroup(const GroupPtr& g, int conj, const Subgroup& h);

/// All elements that are scalar multiples of the identity.
Subgroup scalar_subgroup(const GroupPtr& g);

bool is_normal(const GroupPtr& g, const Subgroup& h);

/// Quotient by a normal subgroup: coset representatives (smallest index per
/// coset, identity coset first) plus the induced multiplication table.
/// Throws InputError if `n` is not normal.
struct QuotientGroup {
  AbstractGroup group;
  std::vector<int> coset_reps;
};
QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

/// Induced action on degree-q monomials (lexicographic order) in dim()
/// variables. `image` collapses duplicate images; `kernel` is the kernel of
/// the map, which must equal {lambda*I in G : lambda^q = 1}.
struct SymmetricPower {
  GroupPtr image;
  Subgroup kernel;
};
SymmetricPower symmetric_power(const GroupPtr& g, int q);

/// Induced matrix of a single element on the degree-q monomial basis.
Matrix symmetric_power_matrix(const Matrix& a, int q);

/// Image in PGL: abstract quotient by the scalar subgroup together with a
/// canonical invariant (sorted multiset of matrices normalized so the first
/// nonzero entry is 1) for comparing projective images inside one GL_n.
struct ProjectiveImage {
  AbstractGroup group;
  std::vector<int> coset_reps;
  std::vector<std::string> canonical;  // sorted

  bool operator==(const ProjectiveImage& o) const { return canonical == o.canonical; }
};
ProjectiveImage projective_reduction(const GroupPtr& g);

/// Character-norm test: true iff (1/|G|) sum_g tr(g) conj(tr(g)) = 1.
bool is_irreducible(const GroupRep& g);

}  // namespace bstack

#endif
