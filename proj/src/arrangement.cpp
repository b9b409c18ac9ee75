#include "bstack/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bstack {

Subspace fixed_space(const GroupPtr& g, const Subgroup& h) {
  Subspace result = Subspace::full(g->dim());
  Matrix id = Matrix::identity(g->dim());
  for (int m : h.members) {
    if (m == 0) continue;
    result = intersect(result, kernel(g->element(m) - id));
    if (result.dim() == 0) break;
  }
  return result;
}

Subspace global_fixed_space(const GroupPtr& g) {
  Subspace result = Subspace::full(g->dim());
  Matrix id = Matrix::identity(g->dim());
  for (int gen : g->generators())
    result = intersect(result, kernel(g->element(gen) - id));
  return result;
}

Subgroup pointwise_stabilizer(const GroupPtr& g, const Subspace& x) {
  std::vector<int> members;
  int d = g->dim();
  for (int i = 0; i < g->order(); ++i) {
    bool fixes = true;
    for (int r = 0; r < x.dim() && fixes; ++r) {
      std::vector<CyclotomicNumber> v(d);
      for (int c = 0; c < d; ++c) v[c] = x.basis().at(r, c);
      std::vector<CyclotomicNumber> image = g->element(i).apply(v);
      for (int c = 0; c < d; ++c)
        if (image[c] != v[c]) { fixes = false; break; }
    }
    if (fixes) members.push_back(i);
  }
  return Subgroup{g, std::move(members)};
}

int StabilizerPoset::find_subgroup(const Subgroup& h) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].subgroup.members == h.members) return static_cast<int>(i);
  return -1;
}

StabilizerPoset build_stabilizer_poset(const GroupPtr& g) {
  int d = g->dim();
  if (global_fixed_space(g).dim() != 0)
    throw InputError("non-essential representation (apply essentialize first)");

  // Worklist closure of the element fixed spaces under intersection.
  Matrix id = Matrix::identity(d);
  std::map<std::string, Subspace> lattice;
  Subspace full = Subspace::full(d);
  lattice.emplace(full.key(), full);
  std::vector<Subspace> work;
  for (int i = 1; i < g->order(); ++i) {
    Subspace x = kernel(g->element(i) - id);
    if (lattice.emplace(x.key(), x).second) work.push_back(x);
  }
  while (!work.empty()) {
    Subspace x = work.back();
    work.pop_back();
    std::vector<Subspace> snapshot;
    snapshot.reserve(lattice.size());
    for (const auto& [k, s] : lattice) snapshot.push_back(s);
    for (const Subspace& y : snapshot) {
      Subspace z = intersect(x, y);
      if (lattice.emplace(z.key(), z).second) work.push_back(z);
    }
  }

  StabilizerPoset sp{g, {}, -1, -1, FinitePoset(1, {{true}})};
  for (const auto& [k, x] : lattice) {
    Subgroup h = pointwise_stabilizer(g, x);
    // Validate the defining closure property V^{Stab(X)} = X.
    if (fixed_space(g, h) != x)
      fail("stabilizer poset: lattice element is not the fixed space of its stabilizer");
    sp.entries.push_back({std::move(h), x});
  }
  std::sort(sp.entries.begin(), sp.entries.end(), [](const auto& a, const auto& b) {
    if (a.subgroup.order() != b.subgroup.order())
      return a.subgroup.order() < b.subgroup.order();
    return a.subgroup.members < b.subgroup.members;
  });
  // Distinct lattice elements must give distinct stabilizers.
  for (size_t i = 0; i + 1 < sp.entries.size(); ++i)
    if (sp.entries[i].subgroup.members == sp.entries[i + 1].subgroup.members)
      fail("stabilizer poset: repeated stabilizer subgroup");

  int n = static_cast<int>(sp.entries.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool sub = sp.entries[j].subgroup.contains_subgroup(sp.entries[i].subgroup);
      bool sup = contains(sp.entries[i].space, sp.entries[j].space);
      if (sub != sup)
        fail("stabilizer poset: H -> V^H failed to be an order isomorphism");
      leq[i][j] = sub;
    }
  sp.poset = FinitePoset(n, leq);
  for (int i = 0; i < n; ++i) {
    sp.poset.set_dim(i, sp.entries[i].space.dim());
    if (sp.entries[i].subgroup.order() == 1) {
      sp.min_index = i;
      sp.poset.set_name(i, "e");
    } else if (sp.entries[i].subgroup.order() == g->order()) {
      sp.max_index = i;
      sp.poset.set_name(i, "G");
    } else {
      sp.poset.set_name(i, "H" + std::to_string(i) + "(" +
                               std::to_string(sp.entries[i].subgroup.order()) + ")");
    }
  }
  if (sp.min_index < 0 || sp.max_index < 0)
    fail("stabilizer poset: missing extreme elements");
  return sp;
}

OrbitPoset orbit_quotient(const StabilizerPoset& sp) {
  const GroupPtr& g = sp.group;
  int n = static_cast<int>(sp.entries.size());
  std::map<std::string, int> entry_by_key;
  for (int i = 0; i < n; ++i) entry_by_key[sp.entries[i].subgroup.key()] = i;

  std::vector<int> class_of(n, -1);
  OrbitPoset op{g, {}, FinitePoset(1, {{true}}), -1, -1};
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    OrbitClass cls;
    int c = static_cast<int>(op.classes.size());
    for (int x = 0; x < g->order(); ++x) {
      Subgroup conj = conjugate_subgroup(g, x, sp.entries[i].subgroup);
      auto it = entry_by_key.find(conj.key());
      if (it == entry_by_key.end())
        fail("orbit quotient: conjugate subgroup missing from the poset");
      if (class_of[it->second] < 0) {
        class_of[it->second] = c;
        cls.entry_indices.push_back(it->second);
      }
    }
    std::sort(cls.entry_indices.begin(), cls.entry_indices.end());
    cls.representative = sp.entries[cls.entry_indices[0]].subgroup;
    cls.class_size = static_cast<int>(cls.entry_indices.size());
    cls.dim = sp.entries[cls.entry_indices[0]].space.dim();
    bool rep_normal = is_normal(g, cls.representative);
    cls.normal = (cls.class_size == 1);
    if (cls.normal != rep_normal)
      fail("orbit quotient: normality flag disagrees with class size");
    op.classes.push_back(std::move(cls));
  }

  int k = static_cast<int>(op.classes.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool rel = false;
      for (int ia : op.classes[a].entry_indices) {
        for (int ib : op.classes[b].entry_indices)
          if (sp.poset.leq(ia, ib)) { rel = true; break; }
        if (rel) break;
      }
      leq[a][b] = rel;
    }
  op.poset = FinitePoset(k, leq);  // validates the induced order
  for (int c = 0; c < k; ++c) {
    op.poset.set_dim(c, op.classes[c].dim);
    if (op.classes[c].representative.order() == 1) {
      op.min_index = c;
      op.poset.set_name(c, "e");
    } else if (op.classes[c].representative.order() == g->order()) {
      op.max_index = c;
      op.poset.set_name(c, "G");
    } else {
      op.poset.set_name(c, "[H" + std::to_string(c) + "(" +
                               std::to_string(op.classes[c].representative.order()) +
                               ")x" + std::to_string(op.classes[c].class_size) + "]");
    }
  }
  if (op.min_index < 0 || op.max_index < 0) fail("orbit quotient: missing extremes");
  return op;
}

FlagEnumeration enumerate_flags(const StabilizerPoset& sp, const OrbitPoset& op) {
  FlagEnumeration fe;
  int d = sp.group->dim();
  for (const Chain& chain : proper_chains(op.poset)) {
    Flag f;
    f.classes = chain;
    f.dim = static_cast<int>(chain.size()) - 1;
    f.d_f = op.classes[chain.back()].dim;
    if (f.d_f <= 0 || f.d_f >= d)
      fail("flag enumeration: d_f must lie strictly between 0 and d");
    // Lift top-down: start at the maximal class representative, then pick at
    // each lower class the smallest member contained in the previous choice.
    std::vector<Subgroup> lifted;
    Subgroup current = sp.entries[op.classes[chain.back()].entry_indices[0]].subgroup;
    lifted.push_back(current);
    for (int pos = static_cast<int>(chain.size()) - 2; pos >= 0; --pos) {
      bool found = false;
      for (int entry : op.classes[chain[pos]].entry_indices) {
        const Subgroup& cand = sp.entries[entry].subgroup;
        if (current.contains_subgroup(cand)) {
          current = cand;
          lifted.push_back(current);
          found = true;
          break;
        }
      }
      if (!found) fail("flag enumeration: no compatible lift exists");
    }
    std::reverse(lifted.begin(), lifted.end());
    f.lifted = std::move(lifted);
    fe.flags.push_back(std::move(f));
  }
  return fe;
}

bool is_reflection(const Matrix& g) {
  if (g.rows() != g.cols()) return false;
  Matrix diff = g - Matrix::identity(g.rows());
  return kernel(diff).dim() == g.rows() - 1;
}

std::vector<int> reflections_of(const GroupRep& g) {
  std::vector<int> out;
  for (int i = 1; i < g.order(); ++i)
    if (is_reflection(g.element(i))) out.push_back(i);
  return out;
}

bool is_reflection_group(const GroupPtr& g) {
  std::vector<int> refl = reflections_of(*g);
  return subgroup_generated(g, refl).order() == g->order();
}

GroupPtr essentialize(const GroupPtr& g) {
  Subspace fixed = global_fixed_space(g);
  int k = fixed.dim();
  if (k == 0) return g;
  int d = g->dim();
  // Change of basis P = [complement | fixed]: standard vectors at the
  // non-pivot columns of the fixed-space basis, then the fixed basis rows.
  std::vector<bool> is_pivot(d, false);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d; ++c)
      if (!fixed.basis().at(r, c).is_zero()) { is_pivot[c] = true; break; }
  Matrix p(d, d);
  int col = 0;
  for (int c = 0; c < d; ++c) {
    if (is_pivot[c]) continue;
    p.at(c, col) = CyclotomicNumber(Rational(1));
    ++col;
  }
  if (col != d - k) fail("essentialize: complement construction failed");
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d; ++c) p.at(c, col + r) = fixed.basis().at(r, c);
  Matrix pinv = p.inverse();

  std::vector<Matrix> gens;
  for (int gen : g->generators()) {
    Matrix conj = pinv * g->element(gen) * p;
    Matrix block(d - k, d - k);
    for (int i = 0; i < d - k; ++i)
      for (int j = 0; j < d - k; ++j) block.at(i, j) = conj.at(i, j);
    gens.push_back(block);
  }
  if (gens.empty()) gens.push_back(Matrix::identity(0));
  GroupPtr result = GroupRep::close(gens, kDefaultClosureCap, g->name());
  if (result->order() != g->order())
    fail("essentialize: restriction changed the group order");
  if (global_fixed_space(result).dim() != 0)
    fail("essentialize: result is not essential");
  return result;
}

FinitePoset intersection_lattice(int ambient_dim, const std::vector<Subspace>& arr,
                                 std::vector<Subspace>* elements_out) {
  std::map<std::string, Subspace> lattice;
  Subspace full = Subspace::full(ambient_dim);
  lattice.emplace(full.key(), full);
  std::vector<Subspace> work;
  for (const Subspace& s : arr) {
    if (s.ambient_dim() != ambient_dim)
      throw InputError("intersection_lattice: ambient dimension mismatch");
    if (lattice.emplace(s.key(), s).second) work.push_back(s);
  }
  while (!work.empty()) {
    Subspace x = work.back();
    work.pop_back();
    std::vector<Subspace> snapshot;
    for (const auto& [k, s] : lattice) snapshot.push_back(s);
    for (const Subspace& y : snapshot) {
      Subspace z = intersect(x, y);
      if (lattice.emplace(z.key(), z).second) work.push_back(z);
    }
  }
  std::vector<Subspace> elems;
  for (const auto& [k, s] : lattice) elems.push_back(s);
  std::sort(elems.begin(), elems.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.key() < b.key();
  });
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = contains(elems[i], elems[j]);
  FinitePoset poset(n, leq);
  for (int i = 0; i < n; ++i) {
    poset.set_dim(i, elems[i].dim());
    poset.set_name(i, "X" + std::to_string(i));
  }
  if (elements_out) *elements_out = std::move(elems);
  return poset;
}

// ---------------------------------------------------------------------------
// Finite-field point counting

namespace {

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long order_mod(long long x, long long p) {
  long long v = x % p, k = 1;
  while (v != 1) {
    v = v * x % p;
    ++k;
    if (k > p) return 0;
  }
  return k;
}

struct ReductionContext {
  long long p;
  long long zeta;  // image of zeta_M, order M in F_p^*
  int M;
};

// Reduce a cyclotomic value; throws on p | denominator.
long long reduce_value(const CyclotomicNumber& x, const ReductionContext& ctx) {
  long long acc = 0;
  long long zpow = 1;
  int step = ctx.M / x.order();
  // zeta_{x.order} maps to zeta^step.
  long long base = pow_mod(ctx.zeta, step, ctx.p);
  BigInt p_big(static_cast<long>(ctx.p));
  for (const auto& c : x.coeffs()) {
    BigInt num = c.num() % p_big;
    BigInt den = c.den() % p_big;
    if (den == 0)
      throw InputError("bad-reduction prime: p divides a denominator");
    long long n = num.get_si();
    if (n < 0) n += ctx.p;
    long long dinv = pow_mod(den.get_si(), ctx.p - 2, ctx.p);
    acc = (acc + n % ctx.p * dinv % ctx.p * zpow) % ctx.p;
    zpow = zpow * base % ctx.p;
  }
  return acc;
}

std::vector<std::vector<long long>> reduce_basis(const Subspace& s,
                                                 const ReductionContext& ctx) {
  std::vector<std::vector<long long>> rows(s.dim(),
                                           std::vector<long long>(s.ambient_dim()));
  for (int r = 0; r < s.dim(); ++r)
    for (int c = 0; c < s.ambient_dim(); ++c)
      rows[r][c] = reduce_value(s.basis().at(r, c), ctx);
  return rows;
}

int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int sel = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    long long inv = pow_mod(m[rank][c], p - 2, p);
    for (int j = 0; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      long long f = m[r][c];
      for (int j = 0; j < cols; ++j)
        m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// F_p kernel basis of the row space (annihilator rows).
std::vector<std::vector<long long>> annihilator_mod_p(
    const std::vector<std::vector<long long>>& basis, int ambient, long long p) {
  // Solve basis * v = 0 by RREF over F_p.
  std::vector<std::vector<long long>> m = basis;
  int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < ambient && rank < rows; ++c) {
    int sel = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    long long inv = pow_mod(m[rank][c], p - 2, p);
    for (int j = 0; j < ambient; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      long long f = m[r][c];
      for (int j = 0; j < ambient; ++j)
        m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(ambient, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long long>> out;
  for (int c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long long> v(ambient, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = (p - m[r][c]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

bool contains_mod_p(const std::vector<std::vector<long long>>& a,
                    const std::vector<std::vector<long long>>& b, long long p) {
  // rowspace(b) subseteq rowspace(a)?
  std::vector<std::vector<long long>> stacked = a;
  for (const auto& r : b) stacked.push_back(r);
  return rank_mod_p(stacked, p) == rank_mod_p(a, p);
}

ReductionContext make_context(const std::vector<Subspace>& arr, long long p) {
  if (!is_prime_ll(p)) throw InputError("count points: p must be prime");
  long long M = 1;
  for (const Subspace& s : arr)
    for (const auto& e : s.basis().entries()) M = lcm_ll(M, e.order());
  ReductionContext ctx{p, 1, static_cast<int>(M)};
  if (M > 1) {
    if ((p - 1) % M != 0)
      throw InputError("bad-reduction prime: p != 1 (mod " + std::to_string(M) +
                       "), no root of unity of order " + std::to_string(M));
    for (long long c = 2; c < p; ++c) {
      long long cand = pow_mod(c, (p - 1) / M, p);
      if (order_mod(cand, p) == M) {
        ctx.zeta = cand;
        break;
      }
    }
    if (ctx.zeta == 1) throw InputError("bad-reduction prime: no generator found");
  }
  return ctx;
}

void check_reduction(const std::vector<Subspace>& arr, const ReductionContext& ctx,
                     std::vector<std::vector<std::vector<long long>>>& reduced) {
  long long p = ctx.p;
  reduced.clear();
  for (const Subspace& s : arr) {
    auto rows = reduce_basis(s, ctx);
    if (rank_mod_p(rows, p) != s.dim())
      throw InputError("bad-reduction prime: rank drop in a subspace basis");
    reduced.push_back(std::move(rows));
  }
  // Incidences between subspaces must be preserved exactly.
  for (size_t i = 0; i < arr.size(); ++i)
    for (size_t j = 0; j < arr.size(); ++j) {
      if (i == j) continue;
      bool exact = contains(arr[i], arr[j]);
      bool modp = contains_mod_p(reduced[i], reduced[j], p);
      if (exact != modp)
        throw InputError("bad-reduction prime: incidence change between subspaces");
    }
}

}  // namespace

bool good_reduction(const std::vector<Subspace>& arr, long long p, std::string* reason) {
  try {
    ReductionContext ctx = make_context(arr, p);
    std::vector<std::vector<std::vector<long long>>> reduced;
    check_reduction(arr, ctx, reduced);
    return true;
  } catch (const InputError& e) {
    if (reason) *reason = e.what();
    return false;
  }
}

long long count_complement_points(const std::vector<Subspace>& arr, long long p) {
  if (arr.empty()) throw InputError("count points: empty arrangement");
  int d = arr[0].ambient_dim();
  for (const Subspace& s : arr)
    if (s.ambient_dim() != d) throw InputError("count points: mixed ambient dims");
  double total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<double>(p);
  if (total > 1e7) throw InputError("count points: p^d exceeds the 10^7 cap");

  ReductionContext ctx = make_context(arr, p);
  std::vector<std::vector<std::vector<long long>>> reduced;
  check_reduction(arr, ctx, reduced);

  // Annihilator rows per subspace: v in S iff ann * v = 0.
  std::vector<std::vector<std::vector<long long>>> anns;
  for (size_t i = 0; i < arr.size(); ++i)
    anns.push_back(annihilator_mod_p(reduced[i], d, p));

  std::vector<long long> v(d, 0);
  long long count = 0;
  long long npoints = 1;
  for (int i = 0; i < d; ++i) npoints *= p;
  for (long long idx = 0; idx < npoints; ++idx) {
    long long t = idx;
    for (int i = 0; i < d; ++i) {
      v[i] = t % p;
      t /= p;
    }
    bool in_any = false;
    for (const auto& ann : anns) {
      bool inside = true;
      for (const auto& row : ann) {
        long long dot = 0;
        for (int i = 0; i < d; ++i) dot += row[i] * v[i] % p;
        if (dot % p != 0) { inside = false; break; }
      }
      if (inside) { in_any = true; break; }
    }
    if (!in_any) ++count;
  }
  return count;
}

}  // namespace bstack
