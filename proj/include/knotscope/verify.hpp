#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotscope/bigint.hpp"
#include "knotscope/corpus.hpp"
#include "knotscope/diagram.hpp"
#include "knotscope/graphs.hpp"

namespace knotscope {

enum class TheoremVerdict { Confirmed, HypothesisNotSatisfied, Failed };

struct TheoremReport {
  std::string name;
  int g = 0;
  BigInt a_g = 0;
  BigInt a_g_minus_1 = 0;
  bool hypothesis_met = false;
  bool mirrored = false;
  TheoremVerdict verdict = TheoremVerdict::HypothesisNotSatisfied;
  std::vector<TorusSummand> summands;
  std::vector<std::string> diagnostics;  // filled when verdict is Failed
  double elapsed_ms = 0;

  // "confirmed-T(5,2)", "hypothesis-not-satisfied" or "FAILED"
  std::string verdict_text() const;
};

// Requires a reduced, connected, alternating knot diagram of genus >= 1.
// Throws NotKnot, NotAlternating, NotReduced or PreconditionFailed. A
// contradiction of the expected conclusion is reported as Failed, not thrown.
TheoremReport verify_main_theorem(const Diagram& d, const std::string& name = {});

struct Lemma37Report {
  std::vector<int> nested;
  std::vector<int> both_sides;  // nested circles with parallel groups on both sides
  bool sqp_fibered = false;

  bool consistent() const noexcept { return both_sides.empty() || !sqp_fibered; }
};

Lemma37Report lemma37_check(const Diagram& d);

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct RecordResult {
  std::string name;
  std::vector<CheckResult> checks;  // in the order requested
};

struct CorpusSummary {
  std::vector<std::string> checks;
  std::vector<RecordResult> records;  // corpus order
  std::vector<RowError> skipped;

  int failures() const noexcept;
  std::string render() const;
};

const std::vector<std::string>& all_checks();

CheckResult run_check(const KnotRecord& r, const std::string& check);

// Throws InvalidArgument for an unknown check name. Output does not depend on `jobs`.
CorpusSummary corpus_run(const Corpus& corpus, std::vector<std::string> checks, int jobs = 1);

}  // namespace knotscope
