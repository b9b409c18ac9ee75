#ifndef BSTACK_REPORT_HPP_
#define BSTACK_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "bstack/verdict.hpp"

namespace bstack {

struct AnalyzeOptions {
  int closure_cap = kDefaultClosureCap;
  bool reflection_mode = true;  // run the triviality engine
  bool timing = false;          // include wall-clock timing (breaks byte-identity)
};

/// Full pipeline: essentialize -> stabilizer poset -> orbit quotient ->
/// flags -> Mobius inversion -> phi -> Ekedahl identity -> verdict. Produces
/// a deterministic JSON report (sorted keys, polynomial coefficients lowest
/// degree first).
nlohmann::json analyze_group(const GroupPtr& g, const AnalyzeOptions& opts = {});

/// True iff the report's requested checks all passed (identity holds, and in
/// reflection mode the verdict is trivial).
bool report_passed(const nlohmann::json& report);

/// Point count of the arrangement complement over F_p next to chi(p).
nlohmann::json count_points_report(const GroupPtr& g, long long prime);

/// Hasse diagram of the orbit poset (or the full stabilizer poset).
std::string export_poset_dot(const GroupPtr& g, bool full);
nlohmann::json export_poset_json(const GroupPtr& g, bool full);

}  // namespace bstack

#endif
