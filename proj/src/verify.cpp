#include "knotscope/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "knotscope/error.hpp"
#include "knotscope/floer.hpp"
#include "knotscope/invariants.hpp"
#include "knotscope/seifert.hpp"

namespace knotscope {

namespace {

BigInt magnitude(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "[" + out + "]";
}

std::string coeff_text(const std::vector<BigInt>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

}  // namespace

std::string TheoremReport::verdict_text() const {
  switch (verdict) {
    case TheoremVerdict::Confirmed:
      return "confirmed-T(" + std::to_string(2 * g + 1) + ",2)";
    case TheoremVerdict::HypothesisNotSatisfied:
      return "hypothesis-not-satisfied";
    case TheoremVerdict::Failed:
      return "FAILED";
  }
  return "FAILED";
}

TheoremReport verify_main_theorem(const Diagram& d, const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  if (d.component_count() != 1)
    throw Error(ErrorCode::NotKnot, std::to_string(d.component_count()) + " components");
  if (!is_alternating(d)) throw Error(ErrorCode::NotAlternating, "diagram is not alternating");
  if (!is_reduced(d)) throw Error(ErrorCode::NotReduced, "diagram has a nugatory crossing");
  if (!is_connected(d)) throw Error(ErrorCode::PreconditionFailed, "diagram is split");

  TheoremReport rep;
  rep.name = name;
  const auto a = alexander_polynomial(d);
  if (a.g < 1) throw Error(ErrorCode::PreconditionFailed, "genus 0");
  rep.g = a.g;
  rep.a_g = a.top();
  rep.a_g_minus_1 = a.a(a.g - 1);
  rep.hypothesis_met = magnitude(rep.a_g) == magnitude(rep.a_g_minus_1);

  auto finish = [&](TheoremVerdict v) {
    rep.verdict = v;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  if (!rep.hypothesis_met) return finish(TheoremVerdict::HypothesisNotSatisfied);

  Diagram work = d;
  int tau = tau_alternating(d);
  if (tau < 0) {
    work = mirror(d);
    rep.mirrored = true;
    tau = tau_alternating(work);
  }
  auto fail = [&](std::string why) {
    rep.diagnostics.push_back(std::move(why));
    rep.diagnostics.push_back("pd " + to_string(work.to_pd()));
    rep.diagnostics.push_back("alexander " + coeff_text(a.coeffs));
    rep.diagnostics.push_back("tau " + std::to_string(tau));
    return finish(TheoremVerdict::Failed);
  };
  if (magnitude(a.top()) != 1 || tau != a.g) return fail("expected |a_g| = 1 and tau = g");

  const auto s = seifert_circles(work);
  const auto nr = nesting_report(s);
  if (!nr.nested.empty()) return fail("nested Seifert circles " + join(nr.nested));
  try {
    rep.summands = torus_sum_decomposition(work).summands;
  } catch (const Error& e) {
    return fail(std::string("torus sum recognizer: ") + e.what());
  }
  if (rep.summands.size() != 1 || rep.summands[0].k != 2 * a.g + 1 || rep.summands[0].sign != +1) {
    std::string list;
    for (const auto& t : rep.summands)
      list += (list.empty() ? "" : " ") + std::string("(") + std::to_string(t.k) + (t.sign > 0 ? ",+)" : ",-)");
    return fail("expected the single summand (" + std::to_string(2 * a.g + 1) + ",+), got " + list);
  }
  return finish(TheoremVerdict::Confirmed);
}

Lemma37Report lemma37_check(const Diagram& d) {
  Lemma37Report r;
  const auto s = seifert_circles(d);
  r.nested = nesting_report(s).nested;
  for (int c : r.nested)
    if (parallel_sides(s, c).size() == 2) r.both_sides.push_back(c);
  r.sqp_fibered = is_sqp_fibered(d);
  return r;
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "fail";
}

int CorpusSummary::failures() const noexcept {
  int n = 0;
  for (const auto& r : records)
    for (const auto& c : r.checks) n += c.status == CheckStatus::Fail;
  return n;
}

std::string CorpusSummary::render() const {
  std::ostringstream out;
  out << "records " << records.size() << " skipped " << skipped.size() << "\n";
  for (const auto& e : skipped) out << "skipped line " << e.line << ": " << e.message << "\n";
  std::map<std::string, std::array<int, 3>> totals;
  for (const auto& r : records) {
    out << r.name;
    for (const auto& c : r.checks) {
      out << " " << c.check << "=" << to_string(c.status);
      ++totals[c.check][static_cast<std::size_t>(c.status)];
    }
    out << "\n";
    for (const auto& c : r.checks)
      if (!c.detail.empty()) out << "  " << c.check << ": " << c.detail << "\n";
  }
  for (const auto& name : checks) {
    const auto& t = totals[name];
    out << "total " << name << " pass " << t[0] << " fail " << t[1] << " skip " << t[2] << "\n";
  }
  out << "failures " << failures() << "\n";
  return out.str();
}

namespace {

using CheckFn = std::function<CheckResult(const KnotRecord&, const Diagram&)>;

CheckResult pass(std::string detail = {}) { return {{}, CheckStatus::Pass, std::move(detail)}; }
CheckResult fail(std::string detail) { return {{}, CheckStatus::Fail, std::move(detail)}; }
CheckResult skip(std::string detail) { return {{}, CheckStatus::Skip, std::move(detail)}; }

LaurentPoly torus_alexander(int k) {
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(i % 2 == 0 ? 1 : -1, i);
  return p;
}

// Compares the recognizer's summands with the Alexander polynomial of `d`.
bool torus_product_matches(const Diagram& d) {
  LaurentPoly product(1);
  for (const auto& s : torus_sum_decomposition(d).summands) product *= torus_alexander(s.k);
  return equal_up_to_units(product, alexander_raw(d));
}

CheckResult check_euler(const KnotRecord&, const Diagram& d) {
  const auto c = static_cast<long>(d.crossing_count());
  const auto e = static_cast<long>(d.arcs().size());
  const auto f = static_cast<long>(d.faces().size());
  std::size_t valence = 0;
  for (const auto& face : d.faces()) valence += face.valence();
  if (c - e + f != 2) return fail("V - E + F = " + std::to_string(c - e + f));
  if (valence != 4 * d.crossing_count()) return fail("face valences sum to " + std::to_string(valence));
  return pass();
}

CheckResult check_genus(const KnotRecord& r, const Diagram& d) {
  const auto a = alexander_polynomial(d);
  std::vector<std::string> problems;
  BigInt sum = 0;
  for (const auto& x : a.coeffs) sum += x;
  if (sum != 1) problems.push_back("Delta(1) = " + sum.str());
  for (int i = 1; i <= a.g; ++i)
    if (a.a(i) != a.a(-i)) problems.push_back("asymmetric at " + std::to_string(i));
  const int seifert_genus = surface_genus(seifert_circles(d), 1);
  if (a.g != seifert_genus)
    problems.push_back("Alexander genus " + std::to_string(a.g) + " vs Seifert genus " + std::to_string(seifert_genus));
  if (r.genus && *r.genus != a.g) problems.push_back("reference genus " + std::to_string(*r.genus));
  if (r.alexander && *r.alexander != a.coeffs) problems.push_back("reference Alexander " + coeff_text(*r.alexander));

  const int sigma = signature(d);
  const auto m = mirror(d);
  if (signature(m) != -sigma) problems.push_back("signature of the mirror is not " + std::to_string(-sigma));
  if (tau_alternating(m) != -tau_alternating(d)) problems.push_back("tau of the mirror is not negated");
  if (std::abs(tau_alternating(d)) > a.g) problems.push_back("|tau| exceeds g");
  if (r.signature && *r.signature != sigma)
    problems.push_back("signature " + std::to_string(sigma) + " vs reference " + std::to_string(*r.signature));
  BigInt goeritz = bareiss_determinant(goeritz_matrix(d), [](const BigInt& x, const BigInt& y) { return BigInt(x / y); });
  if (magnitude(goeritz) != a.determinant()) problems.push_back("Goeritz determinant " + goeritz.str());
  if (problems.empty()) return pass();
  std::string msg;
  for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
  return fail(msg);
}

CheckResult check_fibered(const KnotRecord& r, const Diagram& d) {
  const bool by_alexander = is_fibered_alternating(alexander_polynomial(d));
  const auto pieces = murasugi_decompose(d);
  bool by_pieces = true;
  int fibered_pieces = 0;
  for (const auto& p : pieces) {
    if (!is_fibered_special(p)) {
      by_pieces = false;
      continue;
    }
    ++fibered_pieces;
    const auto g = checkerboard(p);
    if (!check_tree(g.reduced_black)) return fail("fibered special piece " + to_string(p.to_pd()) + " is not a tree");
    if (!check_multiplicity_lemma(g))
      return fail("fibered special piece " + to_string(p.to_pd()) + " has a simple reduced edge");
  }
  if (by_alexander != by_pieces)
    return fail(std::string("|a_g| = 1 is ") + (by_alexander ? "true" : "false") + " but the special pieces say " +
                (by_pieces ? "fibered" : "not fibered"));
  if (r.fibered && *r.fibered != by_alexander) return fail("reference fibered flag disagrees");
  return pass();
}

CheckResult check_ag(const KnotRecord&, const Diagram& d) {
  const auto a = alexander_polynomial(d);
  if (a.g < 1) return skip("genus 0");
  const auto res = check_ag_bound(a, tau_alternating(d));
  std::string detail = std::string(to_string(res.which)) + " " + res.lhs.str() + (res.pass ? " >= " : " < ") + res.rhs.str();
  if (!res.pass) return fail(detail);
  return pass(res.equality ? "equality " + detail : std::string());
}

CheckResult check_trapezoid(const KnotRecord&, const Diagram& d) {
  const auto t = check_trapezoidal(alexander_polynomial(d));
  if (!t.monotone_ok) return fail("|a_i| > |a_{i-1}| at i = " + std::to_string(*t.first_violation));
  if (!t.plateau_ok) return fail("an equality does not propagate down to a_0");
  return pass();
}

CheckResult check_rank(const KnotRecord&, const Diagram& d) {
  const auto a = alexander_polynomial(d);
  const int tau = tau_alternating(d);
  for (int s = 1; s <= a.g + 1; ++s) rank_b(a, tau, s);
  return pass();
}

CheckResult check_theorem(const KnotRecord& r, const Diagram& d) {
  const auto a = alexander_polynomial(d);
  if (a.g < 1) return skip("genus 0");
  const auto t = verify_main_theorem(d, r.name);
  if (t.verdict == TheoremVerdict::Failed) {
    std::string msg;
    for (const auto& line : t.diagnostics) msg += (msg.empty() ? "" : "; ") + line;
    return fail(msg);
  }
  if (t.hypothesis_met) prop22_implication(a, tau_alternating(d));
  return pass(t.verdict == TheoremVerdict::Confirmed ? t.verdict_text() : std::string());
}

CheckResult check_lemma37(const KnotRecord&, const Diagram& d) {
  const auto l = lemma37_check(d);
  if (!l.consistent()) return fail("sqp fibered with parallel groups on both sides of " + join(l.both_sides));
  return pass();
}

CheckResult check_product(const KnotRecord&, const Diagram& d) {
  if (is_special(d) && is_fibered_special(d) && !torus_product_matches(d))
    return fail("torus summands do not multiply to Delta");
  for (const auto& p : murasugi_decompose(d))
    if (is_fibered_special(p) && !torus_product_matches(p))
      return fail("torus summands of piece " + to_string(p.to_pd()) + " do not multiply to its Alexander polynomial");
  return pass();
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks{
      {"euler", check_euler},         {"genus-cross", check_genus}, {"fibered-cross", check_fibered},
      {"ag-bound", check_ag},         {"trapezoid", check_trapezoid}, {"rank-nonneg", check_rank},
      {"theorem", check_theorem},     {"lemma37", check_lemma37},   {"alexander-product", check_product},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"euler",       "genus-cross", "fibered-cross",
                                              "ag-bound",    "trapezoid",   "rank-nonneg",
                                              "theorem",     "lemma37",     "alexander-product"};
  return names;
}

CheckResult run_check(const KnotRecord& r, const std::string& check) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw Error(ErrorCode::InvalidArgument, "unknown check " + check);
  CheckResult out;
  try {
    const auto d = build_diagram(r.pd);
    if (check != "euler" && d.component_count() != 1)
      throw Error(ErrorCode::NotKnot, std::to_string(d.component_count()) + " components");
    out = it->second(r, d);
  } catch (const Error& e) {
    out = fail(e.what());
  }
  out.check = check;
  return out;
}

CorpusSummary corpus_run(const Corpus& corpus, std::vector<std::string> checks, int jobs) {
  if (checks.empty()) checks = all_checks();
  for (const auto& c : checks)
    if (!registry().contains(c)) throw Error(ErrorCode::InvalidArgument, "unknown check " + c);
  CorpusSummary summary;
  summary.checks = checks;
  summary.skipped = corpus.skipped;
  summary.records.resize(corpus.records.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.records.size(); i = next++) {
      const auto& rec = corpus.records[i];
      auto& out = summary.records[i];
      out.name = rec.name;
      for (const auto& c : checks) out.checks.push_back(run_check(rec, c));
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < std::max(1, jobs); ++i) pool.emplace_back(worker);
    worker();
  }
  return summary;
}

}  // namespace knotscope
