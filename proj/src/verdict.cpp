#include "bstack/verdict.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bstack/catalog.hpp"

namespace bstack {

using json = nlohmann::json;

IntPoly orbit_characteristic_polynomial(const OrbitPoset& op) {
  return characteristic_polynomial(op.poset);
}

MotivicExpression mobius_inversion_Ve_symbolic(const OrbitPoset& op) {
  MobiusTable mt(op.poset);
  MotivicExpression e;
  for (int c = 0; c < static_cast<int>(op.classes.size()); ++c) {
    BigInt mu = mt.mu(op.min_index, c);
    if (mu == 0) continue;
    std::string sym = "{V^" + op.poset.name(c) + "/G}";
    std::vector<BigInt> coeff = {mu};
    e = e + MotivicExpression::symbol(sym, LocalizedPoly(IntPoly(std::move(coeff))));
  }
  return e;
}

IntPoly phi_characteristic(const OrbitPoset& op) {
  std::vector<int> all(op.classes.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  IntPoly phi;
  for (const Chain& chain : chains_in(op.poset, all)) {
    int max_class = chain.back();
    if (!op.classes[max_class].normal) continue;
    int sign = (chain.size() % 2 == 1) ? 1 : -1;
    IntPoly term = IntPoly::tn_minus_1(op.classes[max_class].dim);
    phi += (sign == 1) ? term : -term;
  }
  return phi;
}

namespace {

// Coordinates of a rowspace member w.r.t. an RREF basis: because pivot
// columns are unit, the j-th coordinate is the value at the j-th pivot.
std::vector<int> pivot_columns(const Matrix& rref_basis) {
  std::vector<int> pivots;
  for (int r = 0; r < rref_basis.rows(); ++r)
    for (int c = 0; c < rref_basis.cols(); ++c)
      if (!rref_basis.at(r, c).is_zero()) {
        pivots.push_back(c);
        break;
      }
  return pivots;
}

// Induced matrices of the coset representatives of G/N acting on V^N.
struct InducedAction {
  std::vector<Matrix> matrices;  // one per coset rep
  bool faithful;
  GroupPtr image;  // group generated by the distinct matrices
};

InducedAction induced_action_on_fixed(const GroupPtr& g, const Subgroup& n,
                                      const Subspace& vn,
                                      const std::vector<int>& coset_reps) {
  int k = vn.dim(), d = g->dim();
  std::vector<int> pivots = pivot_columns(vn.basis());
  InducedAction out;
  std::set<std::string> distinct;
  std::vector<Matrix> distinct_mats;
  for (int rep : coset_reps) {
    Matrix a(k, k);
    for (int i = 0; i < k; ++i) {
      std::vector<CyclotomicNumber> v(d);
      for (int c = 0; c < d; ++c) v[c] = vn.basis().at(i, c);
      std::vector<CyclotomicNumber> image = g->element(rep).apply(v);
      // Column i of the induced matrix = coordinates of the image of b_i.
      for (int j = 0; j < k; ++j) a.at(j, i) = image[pivots[j]];
      // The image must lie in V^N (N normal), sanity-checked here.
      if (!vn.contains_vector(image))
        fail("induced action: image leaves the fixed space");
    }
    out.matrices.push_back(a);
    if (distinct.insert(a.key()).second) distinct_mats.push_back(a);
  }
  out.faithful = distinct.size() == coset_reps.size();
  if (k == 0)
    out.image = GroupRep::from_elements({Matrix::identity(0)});
  else
    out.image = GroupRep::from_elements(distinct_mats);
  return out;
}

}  // namespace

json NormalSSReport::to_json() const {
  json j;
  j["normal_classes"] = normal_classes;
  j["only_extremes"] = only_extremes;
  json checks = json::array();
  for (const auto& q : quotient_checks) {
    json c;
    c["class"] = q.class_index;
    c["quotient_order"] = q.quotient_order;
    c["faithful"] = q.faithful;
    c["reflection_group"] = q.reflection_group;
    checks.push_back(c);
  }
  j["quotient_checks"] = checks;
  j["all_quotients_reflection"] = all_quotients_reflection;
  return j;
}

NormalSSReport check_normal_ss(const GroupPtr& g, const StabilizerPoset& sp,
                               const OrbitPoset& op) {
  if (!is_reflection_group(g))
    throw InputError("check_normal_ss: group is not a reflection group");
  if (!is_irreducible(*g))
    throw InputError("check_normal_ss: representation is not irreducible");
  NormalSSReport rep;
  for (int c = 0; c < static_cast<int>(op.classes.size()); ++c)
    if (op.classes[c].normal) rep.normal_classes.push_back(c);
  rep.only_extremes =
      rep.normal_classes.size() == 2 &&
      ((rep.normal_classes[0] == op.min_index && rep.normal_classes[1] == op.max_index) ||
       (rep.normal_classes[0] == op.max_index && rep.normal_classes[1] == op.min_index));
  if (op.min_index == op.max_index)  // trivial group
    rep.only_extremes = rep.normal_classes.size() == 1;
  rep.all_quotients_reflection = true;
  for (int c : rep.normal_classes) {
    const Subgroup& n = op.classes[c].representative;
    int entry = sp.find_subgroup(n);
    if (entry < 0) fail("check_normal_ss: class representative missing");
    QuotientGroup q = quotient_group(g, n);
    InducedAction act =
        induced_action_on_fixed(g, n, sp.entries[entry].space, q.coset_reps);
    NormalSSReport::QuotientCheck chk;
    chk.class_index = c;
    chk.quotient_order = q.group.order();
    chk.faithful = act.faithful;
    chk.reflection_group = is_reflection_group(act.image);
    rep.quotient_checks.push_back(chk);
    if (!chk.faithful || !chk.reflection_group) rep.all_quotients_reflection = false;
  }
  return rep;
}

json EkedahlCheck::to_json() const {
  json j;
  j["holds"] = holds;
  j["lhs"] = lhs.to_json();
  j["rhs"] = rhs.to_json();
  return j;
}

EkedahlCheck ekedahl_identity_check(int d, const FlagEnumeration& flags,
                                    const EkedahlAssignments& assign) {
  if (!assign.BG) throw InputError("missing assignment for symbol {BG}");
  if (!assign.Ve) throw InputError("missing assignment for symbol {V_e/G}");
  EkedahlCheck chk;
  chk.lhs = *assign.BG * LocalizedPoly(IntPoly::tn_minus_1(d));
  LocalizedPoly rhs = *assign.Ve;
  for (size_t i = 0; i < flags.flags.size(); ++i) {
    auto it = assign.BN.find(static_cast<int>(i));
    if (it == assign.BN.end())
      throw InputError("missing assignment for symbol {BN_G(f" + std::to_string(i) +
                       ")}");
    LocalizedPoly term = it->second * LocalizedPoly(IntPoly::tn_minus_1(flags.flags[i].d_f));
    if (flags.flags[i].dim % 2 == 1) term = -term;
    rhs += term;
  }
  chk.rhs = rhs;
  chk.holds = (chk.lhs == chk.rhs);
  return chk;
}

EkedahlCheck ekedahl_headline_check(int d, const OrbitPoset& op,
                                    const FlagEnumeration& flags) {
  EkedahlAssignments a;
  a.BG = LocalizedPoly::one();
  a.Ve = LocalizedPoly(orbit_characteristic_polynomial(op));
  for (size_t i = 0; i < flags.flags.size(); ++i)
    a.BN[static_cast<int>(i)] = LocalizedPoly::one();
  return ekedahl_identity_check(d, flags, a);
}

// ---------------------------------------------------------------------------
// Certificates

json Certificate::to_json() const {
  json j;
  j["group"] = group_id;
  j["verdict"] = verdict;
  j["method"] = method;
  if (!reason.empty()) j["reason"] = reason;
  j["order"] = order;
  j["dim"] = dim;
  if (phi_computed) {
    json coeffs = json::array();
    for (const auto& c : phi.coeffs()) coeffs.push_back(c.get_str());
    j["phi"] = coeffs;
    j["phi_invertible"] = phi_invertible;
  }
  if (identity_checked) {
    j["identity_lhs"] = identity.lhs.to_json();
    j["identity_rhs"] = identity.rhs.to_json();
    j["identity_holds"] = identity.holds;
  }
  j["flags"] = flag_summaries;
  if (!citations.empty()) j["citations"] = citations;
  json rec = json::array();
  for (const auto& ch : children) rec.push_back(ch->to_json());
  j["recursion"] = rec;
  return j;
}

namespace {
std::string display_id_of(const GroupPtr& g, const AbstractGroup& abs) {
  if (!g->name().empty()) return g->name();
  return "group<" + abs.fingerprint() + ">";
}
}  // namespace

CertPtr VerdictEngine::lookup_memo(const AbstractGroup& abs) {
  std::lock_guard<std::mutex> lock(mtx_);
  auto it = memo_.find(abs.fingerprint());
  if (it == memo_.end()) return nullptr;
  for (const auto& [stored, cert] : it->second)
    if (isomorphic(stored, abs)) return cert;
  return nullptr;
}

void VerdictEngine::store_memo(const AbstractGroup& abs, const CertPtr& cert) {
  std::lock_guard<std::mutex> lock(mtx_);
  memo_[abs.fingerprint()].push_back({abs, cert});
}

CertPtr VerdictEngine::triviality_criterion(const GroupPtr& g) {
  std::vector<std::string> path;
  return certify(g, path, /*allow_rescue=*/false);
}

CertPtr VerdictEngine::certify(const GroupPtr& g, std::vector<std::string>& path,
                               bool allow_rescue) {
  AbstractGroup abs = g->abstract();
  std::string display_id = display_id_of(g, abs);

  // Base case: the trivial group.
  if (g->order() == 1) {
    auto cert = std::make_shared<Certificate>();
    cert->group_id = display_id;
    cert->verdict = "trivial";
    cert->method = "trivial-group";
    cert->order = 1;
    cert->dim = g->dim();
    cert->citations = {"class of a point"};
    return cert;
  }

  if (allow_rescue) {
    if (CertPtr hit = lookup_memo(abs)) return hit;
  }

  // Cycle guard: a rescue hop may legitimately revisit the same abstract
  // group once (same fingerprint, rescue disabled), so the key carries the
  // mode. Recursion into flag normalizers always strictly shrinks the order.
  std::string fp = abs.fingerprint() + (allow_rescue ? "|r" : "|n");
  if (std::find(path.begin(), path.end(), fp) != path.end())
    fail("triviality criterion: recursion cycle detected");
  if (path.size() > static_cast<size_t>(g->order()) + 64)
    fail("triviality criterion: recursion depth exceeded");
  path.push_back(fp);

  GroupPtr ess = essentialize(g);
  CertPtr cert = criterion_core(ess, display_id, path);
  if (!cert->is_trivial() && allow_rescue) {
    CertPtr rescued = try_rescue(ess, abs, display_id, path);
    if (rescued) cert = rescued;
  }
  path.pop_back();
  if (cert->is_trivial()) store_memo(abs, cert);
  return cert;
}

CertPtr VerdictEngine::criterion_core(const GroupPtr& ess,
                                      const std::string& display_id,
                                      std::vector<std::string>& path) {
  auto cert = std::make_shared<Certificate>();
  cert->group_id = display_id;
  cert->order = ess->order();
  cert->dim = ess->dim();
  cert->method = "criterion";

  auto unresolved = [&](const std::string& reason) {
    cert->verdict = "unresolved";
    cert->reason = reason;
    return cert;
  };

  std::vector<int> refl = reflections_of(*ess);
  if (subgroup_generated(ess, refl).order() != ess->order())
    return unresolved("not generated by reflections");

  // Root lines of the reflections; connected components of the
  // non-commuting graph give the canonical product decomposition.
  std::vector<Subspace> lines;
  std::vector<int> line_of(refl.size());
  std::map<std::string, int> line_index;
  for (size_t i = 0; i < refl.size(); ++i) {
    Matrix diff = ess->element(refl[i]) - Matrix::identity(ess->dim());
    Subspace line = Subspace::span(ess->dim(), diff.transpose());
    if (line.dim() != 1) fail("criterion: reflection with root rank != 1");
    auto [it, fresh] = line_index.emplace(line.key(), static_cast<int>(lines.size()));
    if (fresh) lines.push_back(line);
    line_of[i] = it->second;
  }
  std::vector<int> comp(lines.size());
  for (size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (size_t i = 0; i < refl.size(); ++i)
    for (size_t j = i + 1; j < refl.size(); ++j) {
      if (line_of[i] == line_of[j]) continue;
      if (ess->mult(refl[i], refl[j]) != ess->mult(refl[j], refl[i]))
        comp[find(line_of[i])] = find(line_of[j]);
    }
  std::map<int, std::vector<int>> components;  // root -> reflection positions
  for (size_t i = 0; i < refl.size(); ++i)
    components[find(line_of[i])].push_back(static_cast<int>(i));

  if (components.size() > 1) {
    // Product of the component reflection subgroups.
    cert->method = "product";
    std::vector<Subspace> spans;
    long long order_product = 1;
    int dim_total = 0;
    for (const auto& [root, members] : components) {
      Subspace span = Subspace::zero(ess->dim());
      std::vector<int> gen_indices;
      for (int pos : members) {
        span = join(span, lines[line_of[pos]]);
        gen_indices.push_back(refl[pos]);
      }
      spans.push_back(span);
      dim_total += span.dim();
      order_product *= subgroup_generated(ess, gen_indices).order();
    }
    if (dim_total != ess->dim())
      return unresolved("component spans do not decompose the space");
    if (order_product != ess->order())
      return unresolved("component subgroups do not multiply to the group order");
    // Change of basis: stack all component bases as columns.
    Matrix p(ess->dim(), ess->dim());
    int col = 0;
    for (const Subspace& s : spans)
      for (int r = 0; r < s.dim(); ++r) {
        for (int c = 0; c < ess->dim(); ++c) p.at(c, col) = s.basis().at(r, c);
        ++col;
      }
    Matrix pinv = p.inverse();
    int offset = 0;
    size_t ci = 0;
    bool all_trivial = true;
    for (const auto& [root, members] : components) {
      int k = spans[ci].dim();
      std::vector<Matrix> gens;
      for (int pos : members) {
        Matrix conj = pinv * ess->element(refl[pos]) * p;
        Matrix block(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) block.at(i, j) = conj.at(offset + i, offset + j);
        gens.push_back(block);
      }
      GroupPtr factor = GroupRep::close(gens, cap_,
                                        display_id + ".f" + std::to_string(ci));
      CertPtr child = certify(factor, path, /*allow_rescue=*/true);
      all_trivial = all_trivial && child->is_trivial();
      cert->children.push_back(child);
      offset += k;
      ++ci;
    }
    cert->citations.push_back("class of a product is the product of the classes");
    cert->verdict = all_trivial ? "trivial" : "unresolved";
    if (!all_trivial) cert->reason = "a product factor failed certification";
    return cert;
  }

  if (!is_irreducible(*ess))
    return unresolved("reducible representation without a visible block split");

  StabilizerPoset sp = build_stabilizer_poset(ess);
  OrbitPoset op = orbit_quotient(sp);
  FlagEnumeration flags = enumerate_flags(sp, op);

  // Condition (2) surrogate: every stabilizer subgroup is generated by the
  // reflections it contains; the quotients V^H/G are then affine by
  // Chevalley-Shephard-Todd, cited rather than computed.
  for (const auto& cls : op.classes) {
    std::vector<int> contained;
    for (int r : refl)
      if (cls.representative.contains(r)) contained.push_back(r);
    if (subgroup_generated(ess, contained).order() != cls.representative.order())
      return unresolved("stabilizer subgroup not generated by its reflections");
  }
  cert->citations.push_back(
      "stabilizer subgroups are generated by the reflections they contain; "
      "their quotients are affine (Chevalley-Shephard-Todd)");

  NormalSSReport nrep = check_normal_ss(ess, sp, op);
  if (!nrep.only_extremes)
    return unresolved("unexpected normal stabilizer subgroup beyond {e, G}");
  if (!nrep.all_quotients_reflection)
    return unresolved("a normal stabilizer quotient is not a reflection group");

  cert->phi = phi_characteristic(op);
  cert->phi_computed = true;
  // Independent cross-check: with P~ cap N = {e, G} the double sum must
  // collapse to t^d - 1 exactly.
  if (cert->phi != IntPoly::tn_minus_1(ess->dim()))
    return unresolved("phi cross-check against t^d - 1 failed");
  InvertibilityWitness w = is_invertible(cert->phi);
  cert->phi_invertible = w.invertible;
  if (!w.invertible) return unresolved("phi is not invertible in the localization");

  cert->identity = ekedahl_headline_check(ess->dim(), op, flags);
  cert->identity_checked = true;
  if (!cert->identity.holds) return unresolved("Ekedahl identity check failed");

  bool all_children_trivial = true;
  for (size_t fi = 0; fi < flags.flags.size(); ++fi) {
    const Flag& f = flags.flags[fi];
    Subgroup n = flag_normalizer(ess, f.lifted);
    json summary;
    summary["flag"] = f.classes;
    summary["dim"] = f.dim;
    summary["d_f"] = f.d_f;
    summary["normalizer_order"] = n.order();
    if (n.order() == ess->order()) {
      // Terms with N_G(f) = G stay on the {BG} side of the identity and need
      // no recursive certificate.
      summary["normalizer"] = "G";
      summary["child"] = nullptr;
    } else {
      GroupPtr ng = n.as_group(display_id + ".N(f" + std::to_string(fi) + ")");
      CertPtr child = certify(ng, path, /*allow_rescue=*/true);
      all_children_trivial = all_children_trivial && child->is_trivial();
      summary["child"] = child->group_id;
      summary["child_verdict"] = child->verdict;
      cert->children.push_back(child);
    }
    cert->flag_summaries.push_back(summary);
  }
  if (!all_children_trivial)
    return unresolved("a flag normalizer failed certification");

  cert->verdict = "trivial";
  return cert;
}

CertPtr VerdictEngine::try_rescue(const GroupPtr& g, const AbstractGroup& abs,
                                  const std::string& display_id,
                                  std::vector<std::string>& path) {
  // Abelian groups embed as products of cyclic subgroups of GL_1, all of
  // which have trivial class.
  if (abs.is_abelian()) {
    auto cert = std::make_shared<Certificate>();
    cert->group_id = display_id;
    cert->verdict = "trivial";
    cert->method = "abelian-base";
    cert->order = g->order();
    cert->dim = g->dim();
    cert->citations = {
        "abelian group: product of cyclic groups acting through GL_1",
        "finite subgroups of GL_1 have trivial class"};
    return cert;
  }

  // Re-representation through the catalog: an abstract isomorphism onto a
  // catalog reflection group transports its certificate.
  int n = g->order();
  std::vector<std::string> candidates;
  if (n % 2 == 0 && n / 2 >= 2) candidates.push_back("I2_" + std::to_string(n / 2));
  for (int k = 2, fact = 2; fact <= n && k <= 8; ++k, fact *= k)
    if (fact == n) candidates.push_back("S" + std::to_string(k));
  for (int k = 1; k <= 6; ++k) {
    long long bo = (1LL << k);
    for (int i = 2; i <= k; ++i) bo *= i;
    if (bo == n) candidates.push_back("B" + std::to_string(k));
    if (k >= 2 && bo / 2 == n) candidates.push_back("D" + std::to_string(k));
  }
  for (int m = 2; m <= 30; ++m)
    for (int p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (int k = 1; k <= 4; ++k) {
        long long order = 1;
        for (int i = 0; i < k; ++i) order *= m;
        for (int i = 2; i <= k; ++i) order *= i;
        order /= p;
        if (order == n)
          candidates.push_back("G" + std::to_string(m) + "_" + std::to_string(p) +
                               "_" + std::to_string(k));
      }
    }
  if (n == 120) candidates.push_back("H3");

  for (const std::string& name : candidates) {
    GroupPtr cand;
    try {
      cand = catalog_group(name, cap_);
    } catch (const Error&) {
      continue;
    }
    if (cand->order() != n) continue;
    AbstractGroup cand_abs = cand->abstract();
    if (!find_isomorphism(abs, cand_abs)) continue;
    CertPtr child = certify(cand, path, /*allow_rescue=*/false);
    if (!child->is_trivial()) continue;
    auto cert = std::make_shared<Certificate>();
    cert->group_id = display_id;
    cert->verdict = "trivial";
    cert->method = "isomorphic-catalog";
    cert->order = n;
    cert->dim = g->dim();
    cert->citations = {"abstract isomorphism onto " + name +
                       " (verified element-by-element)"};
    cert->children = {child};
    return cert;
  }
  return nullptr;
}

CertPtr VerdictEngine::verdict_projective_reduction(const GroupPtr& g,
                                                    const GroupPtr& w) {
  if (g->dim() != w->dim())
    throw InputError("projective reduction verdict: dimension mismatch");
  CertPtr wcert = triviality_criterion(w);
  if (!wcert->is_trivial())
    throw InputError("projective reduction verdict: W is not certified trivial");

  ProjectiveImage pg = projective_reduction(g);
  ProjectiveImage pw = projective_reduction(w);

  auto cert = std::make_shared<Certificate>();
  cert->group_id = g->name().empty() ? "G" : g->name();
  cert->method = "projective-reduction";
  cert->order = g->order();
  cert->dim = g->dim();
  cert->children = {wcert};

  if (!(pg == pw)) {
    cert->verdict = "unresolved";
    cert->reason = "projective images differ";
    return cert;
  }
  // {P(V)} = 1 + L + ... + L^{d-1} must be (and is) a unit.
  std::vector<BigInt> ones(g->dim(), BigInt(1));
  InvertibilityWitness w_pv = is_invertible(IntPoly(ones));
  if (!w_pv.invertible) {
    cert->verdict = "unresolved";
    cert->reason = "projective space class is not invertible";
    return cert;
  }
  cert->verdict = "trivial";
  cert->citations = {
      "same image in PGL as " + (w->name().empty() ? std::string("W") : w->name()),
      "{[P(V)/G]} = {P(V)}{BG} for linear actions",
      "quotient by the scalar kernel preserves the stack quotient of P(V)",
      "{P(V)} = 1 + L + ... + L^{d-1} is invertible"};
  return cert;
}

CertPtr VerdictEngine::verdict_projective_reflection(const GroupPtr& w, int q) {
  if (q < 1) throw InputError("projective reflection verdict: q must be >= 1");
  Subgroup scalars = scalar_subgroup(w);
  if (scalars.order() % q != 0)
    throw InputError("C_q not contained in W (scalar subgroup has order " +
                     std::to_string(scalars.order()) + ")");
  CertPtr wcert = triviality_criterion(w);
  if (!wcert->is_trivial())
    throw InputError("projective reflection verdict: W is not certified trivial");

  auto cert = std::make_shared<Certificate>();
  cert->group_id = (w->name().empty() ? std::string("W") : w->name()) + "/C_" +
                   std::to_string(q);
  cert->method = "projective-reflection";
  cert->children = {wcert};

  SymmetricPower sym = symmetric_power(w, q);
  // The kernel must be exactly the scalars with lambda^q = 1.
  std::vector<int> expected;
  for (int m : scalars.members) {
    CyclotomicNumber lambda;
    w->element(m).is_scalar(&lambda);
    if (lambda.pow(q).is_one()) expected.push_back(m);
  }
  if (sym.kernel.members != expected) {
    cert->verdict = "unresolved";
    cert->reason = "symmetric power kernel is not C_q";
    return cert;
  }
  if (static_cast<long long>(sym.image->order()) * q != w->order()) {
    cert->verdict = "unresolved";
    cert->reason = "order of the symmetric power image is not |W|/q";
    return cert;
  }
  cert->order = sym.image->order();
  cert->dim = sym.image->dim();
  std::vector<BigInt> ones(w->dim(), BigInt(1));
  InvertibilityWitness w_pv = is_invertible(IntPoly(ones));
  if (!w_pv.invertible) {
    cert->verdict = "unresolved";
    cert->reason = "projective space class is not invertible";
    return cert;
  }
  cert->verdict = "trivial";
  cert->citations = {
      "S^q(V) is the space of global sections of O(q) on P(V)",
      "the action on the line bundle descends to P(V) with cyclic kernel C_q",
      "{[P(V)/G]} = {[P(V)/W]} = {P(V)}",
      "{P(V)} = 1 + L + ... + L^{d-1} is invertible"};
  return cert;
}

}  // namespace bstack
