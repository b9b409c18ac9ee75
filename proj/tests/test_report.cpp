#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bstack/catalog.hpp"
#include "bstack/report.hpp"

using namespace bstack;
using nlohmann::json;

TEST_CASE("analyze report for S3") {
  json report = analyze_group(catalog_group("S3"));
  CHECK(report["group"]["order"] == 6);
  CHECK(report["group"]["essential_dim"] == 2);
  CHECK(report["lattice"]["size"] == 5);
  CHECK(report["orbit_poset"]["size"] == 3);
  CHECK(report["flags"]["count"] == 1);
  CHECK(report["phi"] == json::array({"-1", "0", "1"}));
  CHECK(report["ekedahl_identity"]["holds"] == true);
  CHECK(report["verdict"]["verdict"] == "trivial");
  CHECK(report_passed(report));
}

TEST_CASE("analyze report is byte-identical across runs") {
  AnalyzeOptions opts;
  std::string a = analyze_group(catalog_group("I2_4"), opts).dump(2);
  std::string b = analyze_group(catalog_group("I2_4"), opts).dump(2);
  CHECK(a == b);
  CHECK(a.find("timing_ms") == std::string::npos);
}

TEST_CASE("timing is opt-in") {
  AnalyzeOptions opts;
  opts.timing = true;
  json report = analyze_group(catalog_group("C4"), opts);
  CHECK(report.contains("timing_ms"));
}

TEST_CASE("analyze without reflection mode omits the verdict") {
  AnalyzeOptions opts;
  opts.reflection_mode = false;
  json report = analyze_group(catalog_group("S3"), opts);
  CHECK_FALSE(report.contains("verdict"));
  CHECK(report_passed(report));  // identity still holds
}

TEST_CASE("count-points report") {
  json r5 = count_points_report(catalog_group("S3"), 5);
  CHECK(r5["good_reduction"] == true);
  CHECK(r5["point_count"] == 12);
  CHECK(r5["chi_at_p"] == "12");
  CHECK(r5["agree"] == true);

  json r3 = count_points_report(catalog_group("S3"), 3);
  CHECK(r3["good_reduction"] == false);
  CHECK_FALSE(r3.value("agree", false));

  json i24 = count_points_report(catalog_group("I2_4"), 5);
  CHECK(i24["agree"] == true);
  CHECK(i24["point_count"] == 8);
}

TEST_CASE("poset export") {
  std::string dot = export_poset_dot(catalog_group("S3"), false);
  CHECK(dot.find("digraph") != std::string::npos);
  json j = export_poset_json(catalog_group("S3"), false);
  CHECK(j["nodes"].size() == 3);
  CHECK(j["cover_edges"].size() == 2);

  json j4 = export_poset_json(catalog_group("I2_4"), false);
  CHECK(j4["nodes"].size() == 4);
  CHECK(j4["cover_edges"].size() == 4);

  json jc = export_poset_json(catalog_group("C2"), false);
  CHECK(jc["nodes"].size() == 2);
  CHECK(jc["cover_edges"].size() == 1);

  json jf = export_poset_json(catalog_group("I2_4"), true);
  CHECK(jf["nodes"].size() == 6);
}

TEST_CASE("group JSON round trip and input forms") {
  // Entries may be integers, "p/q" strings, or {"m", "coeffs"} objects.
  json file = {
      {"name", "swap-and-phase"},
      {"dim", 2},
      {"zeta_order", 4},
      {"generators",
       json::array(
           {{{"rows", 2},
             {"cols", 2},
             {"entries", json::array({json::array({0, 1}), json::array({1, 0})})}},
            {{"rows", 2},
             {"cols", 2},
             {"entries",
              json::array(
                  {json::array({{{"m", 4}, {"coeffs", json::array({"0/1", "1/1"})}}, 0}),
                   json::array({0, "1/1"})})}}})}};
  std::string path = "/tmp/bstack_test_group.json";
  {
    std::ofstream out(path);
    out << file.dump();
  }
  GroupPtr g = load_group_file(path);
  CHECK(g->order() == 32);  // <swap, diag(i,1)> = G(4,1,2)
  CHECK(g->name() == "swap-and-phase");
  std::remove(path.c_str());
}

TEST_CASE("bad group files raise input errors") {
  CHECK_THROWS_AS(load_group_file("/nonexistent/nope.json"), InputError);
  std::string path = "/tmp/bstack_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_group_file(path), InputError);
  std::remove(path.c_str());

  json no_gens = {{"name", "x"}, {"dim", 2}};
  CHECK_THROWS_AS(load_group_json(no_gens), InputError);
}

TEST_CASE("resolve_group dispatches catalog names and files") {
  CHECK(resolve_group("catalog:S3")->order() == 6);
  CHECK_THROWS_AS(resolve_group("catalog:NOPE"), InputError);
}

TEST_CASE("serialization of cyclotomic matrices round-trips") {
  GroupPtr g = catalog_group("I2_5");
  for (int i = 0; i < g->order(); ++i) {
    json j = matrix_to_json(g->element(i));
    Matrix back = matrix_from_json(j);
    CHECK(back == g->element(i));
  }
}
