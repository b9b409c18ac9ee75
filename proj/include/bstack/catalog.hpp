#ifndef BSTACK_CATALOG_HPP_
#define BSTACK_CATALOG_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "bstack/group.hpp"

namespace bstack {

/// Built-in groups, by name:
///   S{n}       symmetric group, essential (n-1)-dim reflection representation
///   I2_{m}     dihedral group of order 2m in GL_2 over Q(zeta_m)
///   B{n}       hyperoctahedral group (signed permutations)
///   D{n}       even-signed permutations
///   G{m}_{p}_{n}  imprimitive group G(m,p,n), p | m
///   H3         icosahedral reflection group over Q(zeta_5)
///   C{m}       cyclic group of scalars in GL_1
GroupPtr catalog_group(const std::string& name, int cap = kDefaultClosureCap);

/// True if the name parses as a catalog entry.
bool is_catalog_name(const std::string& name);

/// Family patterns plus the concrete instances used by the test battery.
std::vector<std::string> catalog_families();
std::vector<std::string> catalog_examples();

// --- JSON serialization ----------------------------------------------------
// Cyclotomic values serialize as {"m": m, "coeffs": ["p/q", ...]}; matrices as
// {"rows": r, "cols": c, "entries": [[value, ...], ...]}. On input, plain
// integers and "p/q" strings are accepted wherever a value is expected.

nlohmann::json cyclo_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclo_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Group file: {"name": str, "dim": d, "zeta_order": m, "generators": [Matrix...]}.
GroupPtr load_group_json(const nlohmann::json& j, int cap = kDefaultClosureCap);
GroupPtr load_group_file(const std::string& path, int cap = kDefaultClosureCap);

/// Resolves "catalog:NAME" or a file path.
GroupPtr resolve_group(const std::string& spec, int cap = kDefaultClosureCap);

}  // namespace bstack

#endif
