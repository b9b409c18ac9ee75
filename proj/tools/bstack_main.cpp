// Command-line front end: group ingestion, catalog access, analysis reports,
// point counting, and poset export.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "bstack/catalog.hpp"
#include "bstack/report.hpp"

namespace {

int closure_cap_from_env(int fallback) {
  const char* env = std::getenv("BSTACK_MAX_ORDER");
  if (!env) return fallback;
  int v = std::atoi(env);
  return v > 0 ? v : fallback;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw bstack::InputError("cannot write to '" + out_path + "'");
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for stabilizer posets, reflection arrangements, "
               "and motivic classifying-stack classes"};
  app.require_subcommand(1);

  int max_order = closure_cap_from_env(bstack::kDefaultClosureCap);
  std::string out_path;
  bool reflection_mode = true;
  bool timing = false;

  // analyze
  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "full analysis report for one group");
  analyze->add_option("input", analyze_input, "catalog:NAME or a group JSON file")
      ->required();
  analyze->add_option("--max-order", max_order, "closure cap on the group order");
  analyze->add_option("--out", out_path, "write the report to a file");
  analyze->add_flag("--reflection-mode,!--no-reflection-mode", reflection_mode,
                    "run the triviality engine (default on)");
  analyze->add_flag("--timing", timing, "include wall-clock timing in the report");

  // analyze-all
  std::vector<std::string> all_inputs;
  auto* analyze_all =
      app.add_subcommand("analyze-all", "analyze several groups in parallel");
  analyze_all->add_option("inputs", all_inputs,
                          "catalog:NAME or file paths (default: the built-in battery)");
  analyze_all->add_option("--max-order", max_order, "closure cap on the group order");

  // count-points
  std::string count_input;
  long long prime = 5;
  auto* count = app.add_subcommand("count-points",
                                   "count arrangement-complement points over F_p");
  count->add_option("input", count_input, "catalog:NAME or a group JSON file")
      ->required();
  count->add_option("--prime", prime, "prime p")->required();
  count->add_option("--max-order", max_order, "closure cap on the group order");

  // export-poset
  std::string export_input, format = "dot";
  bool full = false;
  auto* exp = app.add_subcommand("export-poset", "Hasse diagram of the orbit poset");
  exp->add_option("input", export_input, "catalog:NAME or a group JSON file")
      ->required();
  exp->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--full", full, "export the full stabilizer poset instead");
  exp->add_option("--out", out_path, "write to a file");
  exp->add_option("--max-order", max_order, "closure cap on the group order");

  // catalog
  auto* cat = app.add_subcommand("catalog", "list built-in groups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      bstack::GroupPtr g = bstack::resolve_group(analyze_input, max_order);
      bstack::AnalyzeOptions opts;
      opts.closure_cap = max_order;
      opts.reflection_mode = reflection_mode;
      opts.timing = timing;
      nlohmann::json report = bstack::analyze_group(g, opts);
      write_output(report.dump(2), out_path);
      return bstack::report_passed(report) ? 0 : 1;
    }
    if (analyze_all->parsed()) {
      std::vector<std::string> inputs = all_inputs;
      if (inputs.empty())
        for (const std::string& name : bstack::catalog_examples())
          inputs.push_back("catalog:" + name);
      std::vector<std::future<std::pair<std::string, bool>>> jobs;
      for (const std::string& input : inputs)
        jobs.push_back(std::async(std::launch::async, [input, max_order]() {
          bstack::GroupPtr g = bstack::resolve_group(input, max_order);
          bstack::AnalyzeOptions opts;
          opts.closure_cap = max_order;
          nlohmann::json report = bstack::analyze_group(g, opts);
          return std::make_pair(input, bstack::report_passed(report));
        }));
      bool all_ok = true;
      for (size_t i = 0; i < jobs.size(); ++i) {
        try {
          auto [input, ok] = jobs[i].get();
          std::cout << (ok ? "PASS " : "FAIL ") << input << "\n";
          all_ok = all_ok && ok;
        } catch (const std::exception& e) {
          std::cout << "FAIL " << inputs[i] << " (" << e.what() << ")\n";
          all_ok = false;
        }
      }
      return all_ok ? 0 : 1;
    }
    if (count->parsed()) {
      bstack::GroupPtr g = bstack::resolve_group(count_input, max_order);
      nlohmann::json report = bstack::count_points_report(g, prime);
      write_output(report.dump(2), out_path);
      return report.value("agree", false) ? 0 : 1;
    }
    if (exp->parsed()) {
      bstack::GroupPtr g = bstack::resolve_group(export_input, max_order);
      if (format == "dot")
        write_output(bstack::export_poset_dot(g, full), out_path);
      else
        write_output(bstack::export_poset_json(g, full).dump(2), out_path);
      return 0;
    }
    if (cat->parsed()) {
      std::cout << "families:\n";
      for (const std::string& f : bstack::catalog_families())
        std::cout << "  " << f << "\n";
      std::cout << "examples:\n";
      for (const std::string& n : bstack::catalog_examples())
        std::cout << "  " << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
