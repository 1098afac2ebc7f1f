#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "knotscope/error.hpp"
#include "knotscope/report.hpp"

using namespace knotscope;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitInput = 2;

KnotRecord record_from_pd(const std::string& pd) {
  KnotRecord r;
  r.name = "input";
  r.pd_text = pd;
  r.pd = parse_pd(pd);
  return r;
}

void print_summary(const nlohmann::json& rep) {
  std::cout << rep["name"].get<std::string>() << "\n";
  std::cout << "  crossings " << rep["diagram"]["crossings"] << ", Seifert circles " << rep["seifert"]["circles"].size()
            << ", nested " << rep["seifert"]["nested"].dump() << "\n";
  std::cout << "  alexander " << rep["alexander"]["coeffs"].dump() << "  genus " << rep["genus"] << "  fibered "
            << rep["fibered"] << "\n";
  std::cout << "  signature " << rep["signature"] << "  tau " << rep["tau_alternating"] << "  sqp_fibered "
            << rep["sqp_fibered"] << "  determinant " << rep["determinant"] << "\n";
  if (!rep["ag_bound"].is_null())
    std::cout << "  ag_bound " << rep["ag_bound"]["case"].get<std::string>() << " "
              << (rep["ag_bound"]["pass"].get<bool>() ? "pass" : "FAIL")
              << (rep["ag_bound"]["equality"].get<bool>() ? " (equality)" : "") << "\n";
  std::cout << "  trapezoid " << (rep["trapezoid"]["monotone_ok"].get<bool>() && rep["trapezoid"]["plateau_ok"].get<bool>() ? "pass" : "FAIL")
            << "\n";
  if (!rep["theorem"].is_null()) std::cout << "  theorem " << rep["theorem"]["verdict"].get<std::string>() << "\n";
  if (!rep["reference_mismatches"].empty()) std::cout << "  reference mismatches " << rep["reference_mismatches"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert circles, Alexander polynomials and Floer-side checks for alternating knots"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one knot");
  std::string pd;
  std::string name;
  bool as_json = false;
  auto* pd_opt = analyze_cmd->add_option("--pd", pd, "PD code, e.g. [[1,5,2,4],[3,1,4,6],[5,3,6,2]]");
  auto* name_opt = analyze_cmd->add_option("--name", name, "Knot name in the bundled corpus, e.g. 5_2");
  pd_opt->excludes(name_opt);
  analyze_cmd->add_flag("--json", as_json, "Print the JSON report");

  auto* theorem_cmd = app.add_subcommand("theorem", "Run the |a_g| = |a_{g-1}| pipeline on one diagram");
  theorem_cmd->add_option("--pd", pd, "PD code")->required();

  auto* desum_cmd = app.add_subcommand("desum", "Murasugi desum along a nested Seifert circle");
  int circle = -1;
  desum_cmd->add_option("--pd", pd, "PD code")->required();
  desum_cmd->add_option("--circle", circle, "Seifert circle id")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus operations");
  corpus_cmd->require_subcommand(1);
  auto* run_cmd = corpus_cmd->add_subcommand("run", "Run checks over a corpus file");
  std::string file;
  std::vector<std::string> checks;
  int jobs = 1;
  bool lenient = false;
  bool summary_json = false;
  run_cmd->add_option("file", file, "Corpus CSV (defaults to the bundled corpus)");
  run_cmd->add_option("--check", checks, "Checks to run (default: all)")->delimiter(',');
  run_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--lenient", lenient, "Skip malformed rows instead of failing");
  run_cmd->add_flag("--json", summary_json, "Print the summary as JSON");

  auto* schema_cmd = app.add_subcommand("schema", "JSON schema");
  schema_cmd->require_subcommand(1);
  auto* schema_print = schema_cmd->add_subcommand("print", "Print the analyze report schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) {
      if (pd.empty() && name.empty()) throw Error(ErrorCode::InvalidArgument, "give --pd or --name");
      KnotRecord rec;
      if (!name.empty()) {
        const auto corpus = load_corpus(default_corpus_path(), true);
        rec = find_record(corpus, name);
      } else {
        rec = record_from_pd(pd);
      }
      const auto rep = analyze(rec);
      if (as_json)
        std::cout << rep.dump(2) << "\n";
      else
        print_summary(rep);
      return 0;
    }
    if (*theorem_cmd) {
      const auto t = verify_main_theorem(build_diagram(parse_pd(pd)), "input");
      std::cout << to_json(t).dump(2) << "\n";
      return t.verdict == TheoremVerdict::Failed ? kExitFailures : 0;
    }
    if (*desum_cmd) {
      const auto [left, right] = murasugi_desum(build_diagram(parse_pd(pd)), circle);
      nlohmann::json out{{"left", to_string(left.to_pd())}, {"right", to_string(right.to_pd())}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*run_cmd) {
      const auto corpus = load_corpus(file.empty() ? default_corpus_path() : std::filesystem::path(file), lenient);
      const auto summary = corpus_run(corpus, checks, jobs);
      if (summary_json)
        std::cout << to_json(summary).dump(2) << "\n";
      else
        std::cout << summary.render();
      return summary.failures() == 0 ? 0 : kExitFailures;
    }
    if (*schema_print) {
      std::cout << report_schema().dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
