#include "bstack/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace bstack {

// ---------------------------------------------------------------------------
// AbstractGroup

int AbstractGroup::inverse(int i) const {
  for (int j = 0; j < order(); ++j)
    if (table[i][j] == 0) return j;
  fail("abstract group: element without inverse");
}

long AbstractGroup::element_order(int i) const {
  long k = 1;
  int x = i;
  while (x != 0) {
    x = table[x][i];
    ++k;
    if (k > order() + 1L) fail("abstract group: corrupt table");
  }
  return k;
}

bool AbstractGroup::is_abelian() const {
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

bool AbstractGroup::is_cyclic() const {
  for (int i = 0; i < order(); ++i)
    if (element_order(i) == order()) return true;
  return false;
}

std::vector<std::vector<int>> AbstractGroup::element_classes() const {
  int n = order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> c;
    for (int g = 0; g < n; ++g) {
      int x = table[table[g][i]][inverse(g)];
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(out.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

int AbstractGroup::center_order() const {
  int n = order(), z = 0;
  for (int i = 0; i < n; ++i) {
    bool central = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != table[j][i]) { central = false; break; }
    if (central) ++z;
  }
  return z;
}

std::vector<int> AbstractGroup::subgroup_closure(const std::vector<int>& seed) const {
  std::set<int> s = {0};
  std::vector<int> queue = {0};
  for (int x : seed)
    if (s.insert(x).second) queue.push_back(x);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int g : seed) {
      int y = table[queue[qi]][g];
      if (s.insert(y).second) queue.push_back(y);
    }
  }
  // seed elements have finite order, so closure under right products suffices
  return std::vector<int>(s.begin(), s.end());
}

int AbstractGroup::derived_subgroup_order() const {
  std::vector<int> comms;
  int n = order();
  std::set<int> seen;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = table[table[table[i][j]][inverse(i)]][inverse(j)];
      if (seen.insert(c).second) comms.push_back(c);
    }
  return static_cast<int>(subgroup_closure(comms).size());
}

std::vector<int> AbstractGroup::generating_sequence() const {
  std::vector<int> gens;
  std::vector<int> gen;
  size_t span = 1;
  // Prefer high-order elements so the sequence stays short.
  std::vector<int> by_order(order());
  for (int i = 0; i < order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return element_order(a) > element_order(b);
  });
  std::vector<int> current = {0};
  for (int cand : by_order) {
    if (span == static_cast<size_t>(order())) break;
    if (std::find(current.begin(), current.end(), cand) != current.end()) continue;
    gens.push_back(cand);
    current = subgroup_closure(gens);
    span = current.size();
  }
  return gens;
}

std::string AbstractGroup::fingerprint() const {
  std::map<long, int> order_counts;
  for (int i = 0; i < order(); ++i) ++order_counts[element_order(i)];
  std::vector<int> class_sizes;
  for (const auto& c : element_classes()) class_sizes.push_back(static_cast<int>(c.size()));
  std::sort(class_sizes.begin(), class_sizes.end());
  std::string s = "o" + std::to_string(order());
  s += ";eo";
  for (auto& [o, c] : order_counts) s += std::to_string(o) + ":" + std::to_string(c) + ",";
  s += ";cc";
  for (int c : class_sizes) s += std::to_string(c) + ",";
  s += ";z" + std::to_string(center_order());
  s += ";ab" + std::to_string(is_abelian() ? 1 : 0);
  s += ";d" + std::to_string(derived_subgroup_order());
  return s;
}

std::optional<std::vector<int>> find_isomorphism(const AbstractGroup& a,
                                                 const AbstractGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.fingerprint() != b.fingerprint()) return std::nullopt;
  std::vector<int> gens = a.generating_sequence();
  int n = a.order();

  // Try to extend images of the generating sequence to a full isomorphism.
  std::vector<int> images(gens.size(), -1);

  // Candidates for each generator, filtered by element order.
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    long o = a.element_order(gens[i]);
    for (int x = 0; x < n; ++x)
      if (b.element_order(x) == o) candidates[i].push_back(x);
  }

  std::vector<int> img;  // full element map being built
  std::function<bool(size_t)> assign = [&](size_t pos) -> bool {
    if (pos == gens.size()) {
      // Build the homomorphism by BFS over words in the generators.
      img.assign(n, -1);
      img[0] = 0;
      std::vector<int> queue = {0};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          int y = a.mult(x, gens[gi]);
          int im = b.mult(img[x], images[gi]);
          if (img[y] < 0) {
            img[y] = im;
            queue.push_back(y);
          } else if (img[y] != im) {
            return false;
          }
        }
      }
      if (queue.size() != static_cast<size_t>(n)) return false;  // gens didn't generate
      // Verify it is a bijective homomorphism.
      std::vector<bool> hit(n, false);
      for (int x = 0; x < n; ++x) {
        if (img[x] < 0 || hit[img[x]]) return false;
        hit[img[x]] = true;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (img[a.mult(x, y)] != b.mult(img[x], img[y])) return false;
      return true;
    }
    // Prune: generated subgroup sizes must match on both sides.
    std::vector<int> partial_a(gens.begin(), gens.begin() + pos + 1);
    for (int cand : candidates[pos]) {
      images[pos] = cand;
      std::vector<int> partial_b(images.begin(), images.begin() + pos + 1);
      if (a.subgroup_closure(partial_a).size() != b.subgroup_closure(partial_b).size())
        continue;
      if (assign(pos + 1)) return true;
    }
    images[pos] = -1;
    return false;
  };

  if (gens.empty()) {
    // Trivial group.
    return std::vector<int>{0};
  }
  if (assign(0)) return img;
  return std::nullopt;
}

bool isomorphic(const AbstractGroup& a, const AbstractGroup& b) {
  return find_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// GroupRep

namespace {
constexpr int kMultTableLimit = 4096;
}

GroupPtr GroupRep::close(const std::vector<Matrix>& generators, int cap,
                         const std::string& name) {
  if (generators.empty()) fail("close: no generators");
  int d = generators[0].rows();
  long long m = 1;
  for (const auto& g : generators) {
    if (g.rows() != g.cols() || g.rows() != d)
      throw InputError("close: generators must be square of equal dimension");
    m = lcm_ll(m, g.entry_order_lcm());
  }
  auto grp = std::shared_ptr<GroupRep>(new GroupRep());
  grp->dim_ = d;
  grp->entry_order_ = static_cast<int>(m);
  grp->name_ = name;

  // Embed all generators into one common field so matrix keys are canonical.
  std::vector<Matrix> gens;
  for (const auto& g : generators) {
    Matrix eg = g.embedded(static_cast<int>(m));
    int rank = 0;
    rref(eg, &rank);
    if (rank != d) throw InputError("close: generator is not invertible");
    bool dup = eg.is_identity();
    for (const auto& h : gens)
      if (h == eg) dup = true;
    if (!dup) gens.push_back(eg);
  }
  Matrix id = Matrix::identity(d).embedded(static_cast<int>(m));
  grp->elems_.push_back(id);
  grp->index_[id.key()] = 0;
  grp->parent_gen_.push_back(-1);
  grp->parent_elem_.push_back(-1);
  grp->lgen_.assign(gens.size(), {});

  if (gens.empty()) {  // the trivial group
    grp->finish_closure(cap);
    return grp;
  }

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    // Stage layer products, then assign indices in canonical key order.
    struct Staged {
      Matrix mat;
      int gen, parent;
    };
    std::map<std::string, Staged> staged;
    std::vector<std::tuple<int, int, std::string>> layer_products;  // gen, x, key
    for (int x : frontier) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Matrix prod = gens[gi] * grp->elems_[x];
        std::string k = prod.key();
        if (!grp->index_.count(k) && !staged.count(k))
          staged.emplace(k, Staged{prod, static_cast<int>(gi), x});
        layer_products.emplace_back(static_cast<int>(gi), x, std::move(k));
      }
    }
    std::vector<int> next;
    for (auto& [k, s] : staged) {  // std::map iterates keys in sorted order
      int idx = static_cast<int>(grp->elems_.size());
      if (idx >= cap)
        fail("group too large or infinite (closure cap " + std::to_string(cap) +
             " exceeded)");
      grp->elems_.push_back(std::move(s.mat));
      grp->index_[k] = idx;
      grp->parent_gen_.push_back(s.gen);
      grp->parent_elem_.push_back(s.parent);
      next.push_back(idx);
    }
    for (auto& row : grp->lgen_) row.resize(grp->elems_.size(), -1);
    for (auto& [gi, x, k] : layer_products) grp->lgen_[gi][x] = grp->index_.at(k);
    frontier = std::move(next);
  }
  // Generator indices in the closed group.
  for (const auto& g : gens) grp->generators_.push_back(grp->index_.at(g.key()));
  grp->finish_closure(cap);
  return grp;
}

void GroupRep::finish_closure(int cap) {
  (void)cap;
  int n = order();
  if (n <= kMultTableLimit) {
    mult_.assign(n, std::vector<int>(n));
    for (int j = 0; j < n; ++j) mult_[0][j] = j;
    // Elements are in BFS order, so the parent row always exists already.
    for (int i = 1; i < n; ++i) {
      const std::vector<int>& parent_row = mult_[parent_elem_[i]];
      const std::vector<int>& g = lgen_[parent_gen_[i]];
      std::vector<int>& row = mult_[i];
      for (int j = 0; j < n; ++j) row[j] = g[parent_row[j]];
    }
  }
  inverse_.assign(n, 0);
  elt_order_.assign(n, 1);
  exponent_ = 1;
  for (int i = 1; i < n; ++i) {
    // Walk powers of i; the last one before the identity is the inverse.
    long k = 1;
    int prev = 0, x = i;
    while (x != 0) {
      prev = x;
      x = mult(x, i);
      ++k;
    }
    inverse_[i] = prev;
    elt_order_[i] = k;
    exponent_ = lcm_ll(exponent_, elt_order_[i]);
  }
  long long fo = exponent_;
  for (const auto& e : elems_) fo = lcm_ll(fo, e.entry_order_lcm());
  field_order_ = static_cast<int>(fo);
}

GroupPtr GroupRep::from_elements(const std::vector<Matrix>& elements, int cap,
                                 const std::string& name) {
  if (elements.empty()) fail("from_elements: empty element list");
  // Greedily pick generators (skipping elements already generated), then
  // re-close so the element ordering is the canonical BFS one.
  std::vector<Matrix> gens;
  std::set<std::string> generated;
  generated.insert(Matrix::identity(elements[0].rows()).key());
  auto regenerate = [&]() {
    generated.clear();
    std::vector<Matrix> items = {Matrix::identity(elements[0].rows())};
    generated.insert(items[0].key());
    for (size_t qi = 0; qi < items.size(); ++qi)
      for (const auto& g : gens) {
        Matrix p = items[qi] * g;
        if (generated.insert(p.key()).second) items.push_back(std::move(p));
      }
  };
  for (const auto& e : elements) {
    if (generated.size() == elements.size()) break;
    if (generated.count(e.key())) continue;
    gens.push_back(e);
    regenerate();
  }
  if (gens.empty())  // the trivial group
    gens.push_back(Matrix::identity(elements[0].rows()));
  GroupPtr g = close(gens, cap, name);
  if (g->order() != static_cast<int>(elements.size()))
    fail("from_elements: element list was not closed");
  return g;
}

int GroupRep::index_of(const Matrix& m) const {
  int em = m.entry_order_lcm();
  if (entry_order_ % em != 0) return -1;  // entries outside the field
  auto it = index_.find(m.embedded(entry_order_).key());
  return it == index_.end() ? -1 : it->second;
}

int GroupRep::mult(int i, int j) const {
  if (!mult_.empty()) return mult_[i][j];
  // Recurse along the BFS parent decomposition: i = gen * parent.
  if (i == 0) return j;
  return lgen_[parent_gen_[i]][mult(parent_elem_[i], j)];
}

int GroupRep::power(int i, long e) const {
  long o = elt_order_[i];
  e %= o;
  if (e < 0) e += o;
  int r = 0;
  for (long k = 0; k < e; ++k) r = mult(r, i);
  return r;
}

bool GroupRep::is_abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

const std::vector<std::vector<int>>& GroupRep::element_classes() const {
  if (!classes_.empty() || order() == 0) return classes_;
  int n = order();
  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> c;
    for (int g = 0; g < n; ++g) {
      int x = conjugate(g, i);
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(classes_.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    classes_.push_back(std::move(c));
  }
  return classes_;
}

AbstractGroup GroupRep::abstract() const {
  AbstractGroup a;
  int n = order();
  a.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.table[i][j] = mult(i, j);
  return a;
}

// ---------------------------------------------------------------------------
// Subgroup operations

bool Subgroup::contains(int idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(),
                       other.members.end());
}

std::string Subgroup::key() const {
  std::string s;
  for (int m : members) s += std::to_string(m) + ",";
  return s;
}

GroupPtr Subgroup::as_group(const std::string& name) const {
  std::vector<Matrix> mats;
  for (int i : members) mats.push_back(parent->element(i));
  return GroupRep::from_elements(mats, kDefaultClosureCap, name);
}

AbstractGroup Subgroup::abstract() const {
  int n = order();
  std::vector<int> pos(parent->order(), -1);
  for (int i = 0; i < n; ++i) pos[members[i]] = i;
  AbstractGroup a;
  a.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = parent->mult(members[i], members[j]);
      if (pos[p] < 0) fail("subgroup: member set not closed");
      a.table[i][j] = pos[p];
    }
  return a;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup{g, all};
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h{g, std::move(members)};
  if (h.members.empty() || h.members[0] != 0)
    throw InputError("subgroup must contain the identity");
  for (int a : h.members)
    for (int b : h.members)
      if (!h.contains(g->mult(a, b)))
        throw InputError("subgroup member set not closed under multiplication");
  return h;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= g->order()) throw InputError("subgroup_generated: bad index");
  std::set<int> s = {0};
  std::vector<int> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int gen : seed) {
      int y = g->mult(queue[qi], gen);
      if (s.insert(y).second) queue.push_back(y);
    }
  return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> result;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : h.members)
      if (!h.contains(g->conjugate(x, m))) { ok = false; break; }
    if (ok) result.push_back(x);
  }
  return Subgroup{g, std::move(result)};
}

Subgroup flag_normalizer(const GroupPtr& g, const std::vector<Subgroup>& flag) {
  if (flag.empty()) return whole_group(g);
  std::vector<const Subgroup*> sorted;
  for (const auto& h : flag) sorted.push_back(&h);
  std::sort(sorted.begin(), sorted.end(), [](const Subgroup* a, const Subgroup* b) {
    return a->order() < b->order();
  });
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (!sorted[i + 1]->contains_subgroup(*sorted[i]))
      throw InputError("non-chain input: flag members are not nested");
  std::vector<int> common;
  for (size_t i = 0; i < sorted.size(); ++i) {
    Subgroup n = normalizer(g, *sorted[i]);
    if (i == 0) {
      common = n.members;
    } else {
      std::vector<int> inter;
      std::set_intersection(common.begin(), common.end(), n.members.begin(),
                            n.members.end(), std::back_inserter(inter));
      common = std::move(inter);
    }
  }
  return Subgroup{g, std::move(common)};
}

Subgroup conjugate_subgroup(const GroupPtr& g, int conj, const Subgroup& h) {
  std::vector<int> members;
  members.reserve(h.members.size());
  for (int m : h.members) members.push_back(g->conjugate(conj, m));
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members)};
}

Subgroup scalar_subgroup(const GroupPtr& g) {
  std::vector<int> members;
  for (int i = 0; i < g->order(); ++i)
    if (g->element(i).is_scalar()) members.push_back(i);
  return Subgroup{g, std::move(members)};
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
  for (int x = 0; x < g->order(); ++x)
    for (int m : h.members)
      if (!h.contains(g->conjugate(x, m))) return false;
  return true;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InputError("quotient_group: subgroup is not normal");
  int order = g->order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the smallest member of its coset
    for (int m : n.members) coset_of[g->mult(x, m)] = c;
  }
  QuotientGroup q;
  q.coset_reps = reps;
  int k = static_cast<int>(reps.size());
  q.group.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) q.group.table[i][j] = coset_of[g->mult(reps[i], reps[j])];
  return q;
}

// ---------------------------------------------------------------------------
// Symmetric powers and projective reduction

namespace {

// Degree-q monomial exponent vectors over d variables, lexicographic.
void monomials_rec(int d, int q, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(q);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = q; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(d, q - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials(int d, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (d == 0) return out;
  monomials_rec(d, q, cur, out);
  return out;
}

using PolyMap = std::map<std::vector<int>, CyclotomicNumber>;

PolyMap poly_mul(const PolyMap& a, const PolyMap& b, int d) {
  PolyMap r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(d);
      for (int i = 0; i < d; ++i) e[i] = ea[i] + eb[i];
      auto it = r.find(e);
      CyclotomicNumber term = ca * cb;
      if (it == r.end())
        r.emplace(std::move(e), std::move(term));
      else
        it->second += term;
    }
  return r;
}

Matrix sym_power_matrix(const Matrix& a, int q,
                        const std::vector<std::vector<int>>& mons) {
  int d = a.rows();
  int n = static_cast<int>(mons.size());
  std::map<std::vector<int>, int> mon_index;
  for (int i = 0; i < n; ++i) mon_index[mons[i]] = i;
  Matrix s(n, n);
  for (int col = 0; col < n; ++col) {
    // Image of x^beta: prod_j (sum_i A_ij x_i)^{beta_j}.
    PolyMap acc;
    acc.emplace(std::vector<int>(d, 0), CyclotomicNumber(Rational(1)));
    for (int j = 0; j < d; ++j) {
      PolyMap linear;
      for (int i = 0; i < d; ++i) {
        if (a.at(i, j).is_zero()) continue;
        std::vector<int> e(d, 0);
        e[i] = 1;
        linear.emplace(std::move(e), a.at(i, j));
      }
      for (int rep = 0; rep < mons[col][j]; ++rep) acc = poly_mul(acc, linear, d);
    }
    for (const auto& [e, c] : acc) s.at(mon_index.at(e), col) = c;
  }
  return s;
}

}  // namespace

Matrix symmetric_power_matrix(const Matrix& a, int q) {
  if (q < 1) throw InputError("symmetric_power_matrix: q must be >= 1");
  if (a.rows() != a.cols()) throw InputError("symmetric_power_matrix: square input");
  return sym_power_matrix(a, q, monomials(a.rows(), q));
}

SymmetricPower symmetric_power(const GroupPtr& g, int q) {
  if (q < 1) throw InputError("symmetric_power: q must be >= 1");
  auto mons = monomials(g->dim(), q);
  std::vector<Matrix> images;
  images.reserve(g->order());
  std::vector<int> kernel_members;
  std::string id_key = Matrix::identity(static_cast<int>(mons.size())).key();
  std::set<std::string> seen;
  std::vector<Matrix> distinct;
  for (int i = 0; i < g->order(); ++i) {
    Matrix s = sym_power_matrix(g->element(i), q, mons);
    if (s.is_identity()) kernel_members.push_back(i);
    if (seen.insert(s.key()).second) distinct.push_back(s);
  }
  SymmetricPower result{GroupRep::from_elements(distinct, kDefaultClosureCap,
                                                g->name().empty()
                                                    ? ""
                                                    : g->name() + "_sym" + std::to_string(q)),
                        Subgroup{g, std::move(kernel_members)}};
  return result;
}

ProjectiveImage projective_reduction(const GroupPtr& g) {
  Subgroup z = scalar_subgroup(g);
  QuotientGroup q = quotient_group(g, z);
  ProjectiveImage p;
  p.group = std::move(q.group);
  p.coset_reps = std::move(q.coset_reps);
  std::set<std::string> keys;
  for (int i = 0; i < g->order(); ++i) {
    const Matrix& m = g->element(i);
    // Scale so the first nonzero entry (row-major) is 1.
    CyclotomicNumber lead;
    bool found = false;
    for (int r = 0; r < m.rows() && !found; ++r)
      for (int c = 0; c < m.cols() && !found; ++c)
        if (!m.at(r, c).is_zero()) {
          lead = m.at(r, c);
          found = true;
        }
    keys.insert(m.scaled(lead.inverse()).key());
  }
  p.canonical.assign(keys.begin(), keys.end());
  return p;
}

bool is_irreducible(const GroupRep& g) {
  CyclotomicNumber sum;
  for (int i = 0; i < g.order(); ++i) {
    CyclotomicNumber t = g.element(i).trace();
    sum += t * t.conjugate();
  }
  return sum == CyclotomicNumber(Rational(g.order()));
}

}  // namespace bstack
