#include "bstack/catalog.hpp"

#include <fstream>
#include <sstream>

namespace bstack {

namespace {

using json = nlohmann::json;

Matrix perm_swap(int n, int i) {
  // Transposition of coordinates i, i+1 (0-based).
  Matrix m = Matrix::identity(n);
  m.at(i, i) = CyclotomicNumber(Rational(0));
  m.at(i + 1, i + 1) = CyclotomicNumber(Rational(0));
  m.at(i, i + 1) = CyclotomicNumber(Rational(1));
  m.at(i + 1, i) = CyclotomicNumber(Rational(1));
  return m;
}

Matrix diag_first(int n, const CyclotomicNumber& v) {
  Matrix m = Matrix::identity(n);
  m.at(0, 0) = v;
  return m;
}

std::vector<Matrix> symmetric_generators(int n) {
  // Simple reflections on the root basis: s_i(a_j) = a_j + a_i for |i-j|=1,
  // s_i(a_i) = -a_i.
  int d = n - 1;
  std::vector<Matrix> gens;
  for (int i = 0; i < d; ++i) {
    Matrix m = Matrix::identity(d);
    m.at(i, i) = CyclotomicNumber(Rational(-1));
    if (i > 0) m.at(i, i - 1) = CyclotomicNumber(Rational(1));
    if (i + 1 < d) m.at(i, i + 1) = CyclotomicNumber(Rational(1));
    gens.push_back(m);
  }
  return gens;
}

std::vector<Matrix> dihedral_generators(int m) {
  // Two reflections: the coordinate swap and the swap twisted by zeta_m.
  CyclotomicNumber z = CyclotomicNumber::zeta(m);
  Matrix s(2, 2);
  s.at(0, 1) = CyclotomicNumber(Rational(1));
  s.at(1, 0) = CyclotomicNumber(Rational(1));
  Matrix rs(2, 2);
  rs.at(0, 1) = z;
  rs.at(1, 0) = z.inverse();
  return {s, rs};
}

std::vector<Matrix> hyperoctahedral_generators(int n) {
  std::vector<Matrix> gens = {diag_first(n, CyclotomicNumber(Rational(-1)))};
  for (int i = 0; i + 1 < n; ++i) gens.push_back(perm_swap(n, i));
  return gens;
}

std::vector<Matrix> demihyperoctahedral_generators(int n) {
  // x1 <-> -x2 together with the adjacent transpositions.
  Matrix u = Matrix::identity(n);
  u.at(0, 0) = CyclotomicNumber(Rational(0));
  u.at(1, 1) = CyclotomicNumber(Rational(0));
  u.at(0, 1) = CyclotomicNumber(Rational(-1));
  u.at(1, 0) = CyclotomicNumber(Rational(-1));
  std::vector<Matrix> gens = {u};
  for (int i = 0; i + 1 < n; ++i) gens.push_back(perm_swap(n, i));
  return gens;
}

std::vector<Matrix> imprimitive_generators(int m, int p, int n) {
  if (p < 1 || m % p != 0) throw InputError("G(m,p,n): p must divide m");
  CyclotomicNumber z = CyclotomicNumber::zeta(m);
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(perm_swap(n, i));
  if (p < m) gens.push_back(diag_first(n, z.pow(p)));
  if (p > 1 && n >= 2) {
    // t^-1 s_1 t with t = diag(zeta, 1, ..., 1).
    Matrix v = Matrix::identity(n);
    v.at(0, 0) = CyclotomicNumber(Rational(0));
    v.at(1, 1) = CyclotomicNumber(Rational(0));
    v.at(0, 1) = z.inverse();
    v.at(1, 0) = z;
    gens.push_back(v);
  }
  if (gens.empty()) gens.push_back(Matrix::identity(n));
  return gens;
}

std::vector<Matrix> icosahedral_generators() {
  // Geometric representation from the Coxeter matrix with m_12 = 5,
  // m_23 = 3, m_13 = 2; the entry 2cos(pi/5) = -zeta5^2 - zeta5^3.
  CyclotomicNumber tau = CyclotomicNumber::from_powers(
      5, {Rational(0), Rational(0), Rational(-1), Rational(-1)});
  std::vector<std::vector<CyclotomicNumber>> c(3, std::vector<CyclotomicNumber>(3));
  CyclotomicNumber two{Rational(2)}, zero, mone{Rational(-1)};
  c[0] = {two, -tau, zero};
  c[1] = {-tau, two, mone};
  c[2] = {zero, mone, two};
  std::vector<Matrix> gens;
  for (int i = 0; i < 3; ++i) {
    Matrix s = Matrix::identity(3);
    for (int j = 0; j < 3; ++j) {
      if (j == i) {
        s.at(i, i) = CyclotomicNumber(Rational(-1));
      } else if (!c[i][j].is_zero()) {
        s.at(i, j) = -c[i][j];
      }
    }
    gens.push_back(s);
  }
  return gens;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!isdigit(static_cast<unsigned char>(ch))) return false;
  try {
    out = std::stoi(s);
  } catch (...) {
    return false;
  }
  return true;
}

struct ParsedName {
  std::string family;
  std::vector<int> params;
};

bool parse_catalog_name(const std::string& name, ParsedName& out) {
  if (name == "H3") {
    out = {"H3", {}};
    return true;
  }
  if (name.rfind("I2_", 0) == 0) {
    int m;
    if (parse_int(name.substr(3), m) && m >= 2) {
      out = {"I2", {m}};
      return true;
    }
    return false;
  }
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'B' || name[0] == 'D' ||
                           name[0] == 'C')) {
    int n;
    if (parse_int(name.substr(1), n)) {
      out = {std::string(1, name[0]), {n}};
      return true;
    }
  }
  if (name.size() >= 2 && name[0] == 'G') {
    // G{m}_{p}_{n}
    std::vector<int> parts;
    std::string rest = name.substr(1);
    size_t pos = 0;
    while (true) {
      size_t next = rest.find('_', pos);
      std::string tok = rest.substr(pos, next == std::string::npos ? next : next - pos);
      int v;
      if (!parse_int(tok, v)) return false;
      parts.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (parts.size() == 3) {
      out = {"G", parts};
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_catalog_name(const std::string& name) {
  ParsedName p;
  return parse_catalog_name(name, p);
}

GroupPtr catalog_group(const std::string& name, int cap) {
  ParsedName p;
  if (!parse_catalog_name(name, p))
    throw InputError("unknown catalog group '" + name + "'");
  if (p.family == "S") {
    if (p.params[0] < 2) throw InputError("S{n} needs n >= 2");
    return GroupRep::close(symmetric_generators(p.params[0]), cap, name);
  }
  if (p.family == "I2") return GroupRep::close(dihedral_generators(p.params[0]), cap, name);
  if (p.family == "B") {
    if (p.params[0] < 1) throw InputError("B{n} needs n >= 1");
    return GroupRep::close(hyperoctahedral_generators(p.params[0]), cap, name);
  }
  if (p.family == "D") {
    if (p.params[0] < 2) throw InputError("D{n} needs n >= 2");
    return GroupRep::close(demihyperoctahedral_generators(p.params[0]), cap, name);
  }
  if (p.family == "G")
    return GroupRep::close(imprimitive_generators(p.params[0], p.params[1], p.params[2]),
                           cap, name);
  if (p.family == "H3") return GroupRep::close(icosahedral_generators(), cap, name);
  if (p.family == "C") {
    if (p.params[0] < 1) throw InputError("C{m} needs m >= 1");
    Matrix g(1, 1);
    g.at(0, 0) = CyclotomicNumber::zeta(p.params[0]);
    return GroupRep::close({g}, cap, name);
  }
  throw InputError("unknown catalog group '" + name + "'");
}

std::vector<std::string> catalog_families() {
  return {"S{n}", "I2_{m}", "B{n}", "D{n}", "G{m}_{p}_{n}", "H3", "C{m}"};
}

std::vector<std::string> catalog_examples() {
  std::vector<std::string> names = {"S3", "S4", "S5"};
  for (int m = 3; m <= 12; ++m) names.push_back("I2_" + std::to_string(m));
  names.insert(names.end(), {"B2", "B3", "D4", "G3_1_2", "G4_4_2", "H3", "C4"});
  return names;
}

json cyclo_to_json(const CyclotomicNumber& x) {
  json j;
  j["m"] = x.order();
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
  j["coeffs"] = coeffs;
  return j;
}

CyclotomicNumber cyclo_from_json(const json& j) {
  if (j.is_number_integer())
    return CyclotomicNumber(Rational(static_cast<long>(j.get<long long>())));
  if (j.is_string()) return CyclotomicNumber(Rational::parse(j.get<std::string>()));
  if (j.is_object() && j.contains("m") && j.contains("coeffs")) {
    int m = j.at("m").get<int>();
    if (m < 1) throw InputError("cyclotomic value: m must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_number_integer())
        coeffs.push_back(Rational(static_cast<long>(c.get<long long>())));
      else
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    if (coeffs.size() > static_cast<size_t>(euler_phi(m)))
      throw InputError("cyclotomic value: too many coefficients");
    return CyclotomicNumber::from_powers(m, coeffs);
  }
  throw InputError("bad cyclotomic value in JSON");
}

json matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(cyclo_to_json(m.at(r, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw InputError("matrix JSON needs rows, cols, entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw InputError("matrix JSON: wrong number of rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError("matrix JSON: wrong number of columns");
    for (int c = 0; c < cols; ++c) m.at(r, c) = cyclo_from_json(row[c]);
  }
  return m;
}

GroupPtr load_group_json(const json& j, int cap) {
  if (!j.is_object() || !j.contains("generators"))
    throw InputError("group JSON needs a generators array");
  std::string name = j.value("name", "");
  int dim = j.value("dim", -1);
  std::vector<Matrix> gens;
  for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
  if (gens.empty()) throw InputError("group JSON: empty generator list");
  if (dim >= 0 && gens[0].rows() != dim)
    throw InputError("group JSON: dim does not match generator shape");
  GroupPtr grp = GroupRep::close(gens, cap, name);
  if (j.contains("zeta_order")) {
    int m = j.at("zeta_order").get<int>();
    if (grp->field_order() % m != 0 && m % grp->field_order() != 0)
      throw InputError("group JSON: zeta_order incompatible with generators");
  }
  return grp;
}

GroupPtr load_group_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("JSON parse error in '" + path + "': " + e.what());
  }
  return load_group_json(j, cap);
}

GroupPtr resolve_group(const std::string& spec, int cap) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_group(spec.substr(8), cap);
  return load_group_file(spec, cap);
}

}  // namespace bstack
