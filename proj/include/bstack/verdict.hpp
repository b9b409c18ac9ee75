#ifndef BSTACK_VERDICT_HPP_
#define BSTACK_VERDICT_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bstack/arrangement.hpp"
#include "bstack/motivic.hpp"

namespace bstack {

/// chi_{P~}(t) = sum over orbit classes of mu(e-hat, c) t^{dim V^c}.
IntPoly orbit_characteristic_polynomial(const OrbitPoset& op);

/// The Mobius-inversion expansion of {V_e/G} as a formal sum of class
/// symbols mu(H) {V^H/G}; one symbol per orbit class.
MotivicExpression mobius_inversion_Ve_symbolic(const OrbitPoset& op);

/// phi_rho(t): chain-signed sum, over nonempty chains of the full orbit poset
/// whose maximum is a normal class H, of (-1)^{dim f} (t^{dim V^H} - 1).
IntPoly phi_characteristic(const OrbitPoset& op);

/// Exhaustive scan over the stabilizer classes: which are normal, whether
/// they reduce to {e, G}, and whether the induced action of G/N on V^N is
/// generated by reflections for each normal stabilizer subgroup N.
/// Requires an irreducible reflection group (throws InputError otherwise).
struct NormalSSReport {
  std::vector<int> normal_classes;  // orbit class indices
  bool only_extremes = false;       // P~ cap N == {e, G}
  struct QuotientCheck {
    int class_index;
    int quotient_order;
    bool faithful;
    bool reflection_group;
  };
  std::vector<QuotientCheck> quotient_checks;
  bool all_quotients_reflection = false;
  nlohmann::json to_json() const;
};
NormalSSReport check_normal_ss(const GroupPtr& g, const StabilizerPoset& sp,
                               const OrbitPoset& op);

/// Both sides of the Ekedahl identity
///   {BG} (L^d - 1) = {V_e/G} + sum_f (-1)^{dim f} {BN_G(f)} (L^{d_f} - 1)
/// under supplied values. Every referenced symbol must be assigned; a missing
/// one raises InputError("missing assignment ...").
struct EkedahlAssignments {
  std::optional<LocalizedPoly> BG;
  std::optional<LocalizedPoly> Ve;
  std::map<int, LocalizedPoly> BN;  // keyed by flag index
};
struct EkedahlCheck {
  bool holds = false;
  LocalizedPoly lhs, rhs;
  nlohmann::json to_json() const;
};
EkedahlCheck ekedahl_identity_check(int d, const FlagEnumeration& flags,
                                    const EkedahlAssignments& assign);
/// The headline instance: all {B.} = 1 and {V_e/G} = chi_{P~}(L), which
/// reduces the identity to chi(L) + sum_f (-1)^{dim f}(L^{d_f}-1) = L^d - 1.
EkedahlCheck ekedahl_headline_check(int d, const OrbitPoset& op,
                                    const FlagEnumeration& flags);

/// Verdict certificate. "trivial" requires every recorded check to have
/// passed and every child certificate to be trivial.
struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;
struct Certificate {
  std::string group_id;   // catalog name when known, else fingerprint id
  std::string verdict;    // "trivial" | "unresolved"
  std::string method;     // criterion / product / abelian-base / ...
  std::string reason;     // set when unresolved
  int order = 0;
  int dim = 0;
  bool phi_computed = false;
  IntPoly phi;
  bool phi_invertible = false;
  bool identity_checked = false;
  EkedahlCheck identity;
  std::vector<nlohmann::json> flag_summaries;
  std::vector<std::string> citations;
  std::vector<CertPtr> children;

  bool is_trivial() const { return verdict == "trivial"; }
  nlohmann::json to_json() const;
};

/// The recursive certification engine. Thread-safe: the memo table of
/// certified abstract groups is append-only under a mutex, so verdicts for
/// distinct groups may be computed concurrently.
class VerdictEngine {
 public:
  explicit VerdictEngine(int closure_cap = kDefaultClosureCap) : cap_(closure_cap) {}

  /// Reflection-mode triviality criterion. The given representation must be
  /// generated by its reflections; otherwise the verdict is unresolved with
  /// the failing check named. Flag normalizers are certified recursively.
  CertPtr triviality_criterion(const GroupPtr& g);

  /// G and W in the same GL_d with the same projective image, W a certified
  /// reflection group => {BG} = 1. Mismatched projective images are refused
  /// (verdict unresolved); dimension mismatch and an uncertified W throw.
  CertPtr verdict_projective_reduction(const GroupPtr& g, const GroupPtr& w);

  /// (W, q) with C_q = {lambda I : lambda^q = 1} contained in W: the image of
  /// W on S^q(V) is W/C_q and its class is trivial. Throws InputError when
  /// C_q is not contained in W or W fails certification.
  CertPtr verdict_projective_reflection(const GroupPtr& w, int q);

 private:
  CertPtr certify(const GroupPtr& g, std::vector<std::string>& path,
                  bool allow_rescue);
  CertPtr criterion_core(const GroupPtr& ess, const std::string& display_id,
                         std::vector<std::string>& path);
  CertPtr try_rescue(const GroupPtr& g, const AbstractGroup& abs,
                     const std::string& display_id, std::vector<std::string>& path);
  CertPtr lookup_memo(const AbstractGroup& abs);
  void store_memo(const AbstractGroup& abs, const CertPtr& cert);

  int cap_;
  std::mutex mtx_;
  std::map<std::string, std::vector<std::pair<AbstractGroup, CertPtr>>> memo_;
};

}  // namespace bstack

#endif
