#include "bstack/report.hpp"

#include <chrono>

#include "bstack/catalog.hpp"

namespace bstack {

using json = nlohmann::json;

namespace {

json intpoly_coeffs(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json orbit_classes_json(const StabilizerPoset& sp, const OrbitPoset& op) {
  MobiusTable mt(op.poset);
  json classes = json::array();
  for (size_t c = 0; c < op.classes.size(); ++c) {
    json j;
    j["name"] = op.poset.name(static_cast<int>(c));
    j["representative_order"] = op.classes[c].representative.order();
    j["class_size"] = op.classes[c].class_size;
    j["dim_fixed_space"] = op.classes[c].dim;
    j["normal"] = op.classes[c].normal;
    j["mu"] = mt.mu(op.min_index, static_cast<int>(c)).get_str();
    classes.push_back(j);
  }
  return classes;
}

}  // namespace

json analyze_group(const GroupPtr& g, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["group"]["name"] = g->name();
  report["group"]["order"] = g->order();
  report["group"]["input_dim"] = g->dim();
  report["group"]["zeta_order"] = g->field_order();
  report["group"]["exponent"] = g->exponent();

  GroupPtr ess = essentialize(g);
  report["group"]["essential_dim"] = ess->dim();
  report["group"]["is_reflection_group"] = is_reflection_group(ess);
  report["group"]["irreducible"] = is_irreducible(*ess);

  StabilizerPoset sp = build_stabilizer_poset(ess);
  OrbitPoset op = orbit_quotient(sp);
  FlagEnumeration flags = enumerate_flags(sp, op);

  report["lattice"]["size"] = static_cast<int>(sp.entries.size());
  report["lattice"]["chi"] = intpoly_coeffs(characteristic_polynomial(sp.poset));
  report["orbit_poset"]["size"] = static_cast<int>(op.classes.size());
  report["orbit_poset"]["classes"] = orbit_classes_json(sp, op);
  report["orbit_poset"]["chi"] = intpoly_coeffs(orbit_characteristic_polynomial(op));
  report["flags"]["count"] = static_cast<int>(flags.flags.size());
  {
    json fl = json::array();
    for (const Flag& f : flags.flags) {
      json j;
      j["classes"] = f.classes;
      j["dim"] = f.dim;
      j["d_f"] = f.d_f;
      fl.push_back(j);
    }
    report["flags"]["list"] = fl;
  }

  report["phi"] = intpoly_coeffs(phi_characteristic(op));
  EkedahlCheck identity = ekedahl_headline_check(ess->dim(), op, flags);
  report["ekedahl_identity"] = identity.to_json();

  if (opts.reflection_mode) {
    VerdictEngine engine(opts.closure_cap);
    CertPtr cert = engine.triviality_criterion(ess);
    report["verdict"] = cert->to_json();
  }

  if (opts.timing) {
    auto dt = std::chrono::steady_clock::now() - t0;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }
  return report;
}

bool report_passed(const json& report) {
  if (!report.contains("ekedahl_identity") ||
      !report["ekedahl_identity"].value("holds", false))
    return false;
  if (report.contains("verdict"))
    return report["verdict"].value("verdict", "") == "trivial";
  return true;
}

json count_points_report(const GroupPtr& g, long long prime) {
  GroupPtr ess = essentialize(g);
  StabilizerPoset sp = build_stabilizer_poset(ess);
  // The arrangement: every fixed subspace except the ambient space itself.
  std::vector<Subspace> arr;
  for (const auto& e : sp.entries)
    if (e.space.dim() < ess->dim()) arr.push_back(e.space);
  json report;
  report["group"]["name"] = g->name();
  report["group"]["order"] = g->order();
  report["prime"] = prime;
  report["arrangement_size"] = static_cast<int>(arr.size());
  std::string reason;
  if (!good_reduction(arr, prime, &reason)) {
    report["good_reduction"] = false;
    report["reason"] = reason;
    return report;
  }
  report["good_reduction"] = true;
  long long count = count_complement_points(arr, prime);
  IntPoly chi = characteristic_polynomial(sp.poset);
  BigInt chi_p = chi.evaluate(BigInt(static_cast<long>(prime)));
  report["point_count"] = count;
  report["chi"] = intpoly_coeffs(chi);
  report["chi_at_p"] = chi_p.get_str();
  report["agree"] = (BigInt(static_cast<long>(count)) == chi_p);
  return report;
}

namespace {
struct PosetPair {
  StabilizerPoset sp;
  OrbitPoset op;
};
PosetPair build_posets(const GroupPtr& g) {
  GroupPtr ess = essentialize(g);
  StabilizerPoset sp = build_stabilizer_poset(ess);
  OrbitPoset op = orbit_quotient(sp);
  return {std::move(sp), std::move(op)};
}
}  // namespace

std::string export_poset_dot(const GroupPtr& g, bool full) {
  PosetPair pp = build_posets(g);
  std::string name = g->name().empty() ? std::string("poset") : g->name();
  for (auto& ch : name)
    if (!isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return full ? to_dot(pp.sp.poset, name) : to_dot(pp.op.poset, name);
}

json export_poset_json(const GroupPtr& g, bool full) {
  PosetPair pp = build_posets(g);
  const FinitePoset& poset = full ? pp.sp.poset : pp.op.poset;
  MobiusTable mt(poset);
  int lo = poset.unique_min();
  json nodes = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    json n;
    n["name"] = poset.name(i);
    n["dim"] = poset.dim(i);
    if (lo >= 0 && poset.leq(lo, i)) n["mu"] = mt.mu(lo, i).get_str();
    nodes.push_back(n);
  }
  json edges = json::array();
  for (auto [a, b] : poset.cover_relations()) edges.push_back({a, b});
  json j;
  j["full"] = full;
  j["nodes"] = nodes;
  j["cover_edges"] = edges;
  return j;
}

}  // namespace bstack
