#ifndef BSTACK_ARRANGEMENT_HPP_
#define BSTACK_ARRANGEMENT_HPP_

#include <string>
#include <vector>

#include "bstack/group.hpp"
#include "bstack/poset.hpp"

namespace bstack {

/// V^H: the subspace fixed pointwise by every element of H.
Subspace fixed_space(const GroupPtr& g, const Subgroup& h);

/// Fixed space of the whole group.
Subspace global_fixed_space(const GroupPtr& g);

/// {g in G : X is fixed pointwise by g}.
Subgroup pointwise_stabilizer(const GroupPtr& g, const Subspace& x);

/// The poset of stabilizer subgroups together with their fixed spaces.
/// Entry order is deterministic (subgroup size, then member key). The order
/// relation is subgroup inclusion, which corresponds to reverse inclusion of
/// the fixed subspaces; the trivial subgroup is the minimum and G the maximum.
struct StabilizerPoset {
  GroupPtr group;
  struct Entry {
    Subgroup subgroup;
    Subspace space;
  };
  std::vector<Entry> entries;
  int min_index = -1;  // ({e}, V)
  int max_index = -1;  // (G, {0})
  FinitePoset poset;   // with dim labels

  int find_subgroup(const Subgroup& h) const;  // -1 if not an entry
};

/// Intersection-lattice construction; requires a faithful essential
/// representation (throws InputError("non-essential representation")).
StabilizerPoset build_stabilizer_poset(const GroupPtr& g);

/// Conjugacy classes of stabilizer subgroups with the induced order.
struct OrbitClass {
  Subgroup representative;
  std::vector<int> entry_indices;  // members, as StabilizerPoset entries
  int class_size = 0;
  int dim = 0;      // dim V^H
  bool normal = false;
};
struct OrbitPoset {
  GroupPtr group;
  std::vector<OrbitClass> classes;
  FinitePoset poset;  // dim labels attached
  int min_index = -1, max_index = -1;
};
OrbitPoset orbit_quotient(const StabilizerPoset& sp);

/// Chains of the proper part of the orbit poset, with a compatible lift to an
/// honest nested chain of subgroups (smallest-index representatives).
struct Flag {
  std::vector<int> classes;        // ascending chain of orbit class indices
  int dim = 0;                     // |chain| - 1
  int d_f = 0;                     // dim V^{H_max}
  std::vector<Subgroup> lifted;    // nested subgroups, smallest first
};
struct FlagEnumeration {
  std::vector<Flag> flags;
};
FlagEnumeration enumerate_flags(const StabilizerPoset& sp, const OrbitPoset& op);

/// True iff g has finite order and fixes a hyperplane pointwise
/// (dim ker(g - I) = d - 1).
bool is_reflection(const Matrix& g);

/// Indices of the reflections of G (identity excluded).
std::vector<int> reflections_of(const GroupRep& g);

/// True iff G is generated by its reflections.
bool is_reflection_group(const GroupPtr& g);

/// Restriction of the action to a complement of V^G. Returns the input
/// unchanged when already essential; the result is faithful and essential.
GroupPtr essentialize(const GroupPtr& g);

/// Intersection lattice of an arbitrary subspace arrangement (the subspaces
/// plus all intersections plus the ambient space), as a poset ordered by
/// reverse inclusion with dim labels. `elements_out` receives the subspaces
/// in poset index order.
FinitePoset intersection_lattice(int ambient_dim, const std::vector<Subspace>& arr,
                                 std::vector<Subspace>* elements_out = nullptr);

/// Points of F_p^d lying in none of the subspaces. Entries may involve
/// zeta_M; reduction sends zeta_M to a fixed element of order M in F_p*,
/// which requires p = 1 (mod M). Throws on bad reduction (p dividing a
/// denominator, rank drop, or incidence change) and on p^d > 10^7.
long long count_complement_points(const std::vector<Subspace>& arr, long long p);

/// Same good-reduction test without counting; reason reported on failure.
bool good_reduction(const std::vector<Subspace>& arr, long long p,
                    std::string* reason = nullptr);

}  // namespace bstack

#endif
