#include "knotscope/report.hpp"

#include <limits>

#include "knotscope/error.hpp"

namespace knotscope {

using nlohmann::json;

namespace {

const char* sign_text(int s) { return s > 0 ? "+" : "-"; }

json coeffs_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json to_json(const Diagram& d) {
  json signs = json::array();
  int writhe = 0;
  for (const auto& x : d.crossings()) {
    signs.push_back(x.sign);
    writhe += x.sign;
  }
  return {{"pd", to_string(d.to_pd())},
          {"crossings", d.crossing_count()},
          {"components", d.component_count()},
          {"arcs", d.arcs().size()},
          {"faces", d.faces().size()},
          {"signs", signs},
          {"writhe", writhe},
          {"alternating", is_alternating(d)},
          {"reduced", is_reduced(d)},
          {"connected", is_connected(d)}};
}

json to_json(const SeifertStructure& s) {
  json circles = json::array();
  for (const auto& c : s.circles())
    circles.push_back({{"id", c.id}, {"arcs", c.arcs}, {"left_region", c.left_region}, {"right_region", c.right_region}});
  json bands = json::array();
  for (const auto& b : s.bands())
    bands.push_back({{"crossing", b.crossing}, {"circles", b.circles}, {"sign", b.sign}, {"region", b.region}});
  json groups = json::array();
  for (const auto& g : s.band_groups())
    groups.push_back({{"circles", g.circles}, {"crossings", g.crossings}, {"region", g.region}, {"parallel", g.parallel()}});
  const auto nr = nesting_report(s);
  json sides = json::array();
  for (const auto& c : nr.side_counts) sides.push_back(c);
  return {{"circles", circles},       {"bands", bands},     {"groups", groups},
          {"euler", s.surface_euler()}, {"nested", nr.nested}, {"extremal", nr.extremal},
          {"side_counts", sides},     {"special", nr.nested.empty()}};
}

json to_json(const CheckerboardGraphs& g) {
  json edges = json::array();
  for (const auto& e : g.reduced_black.edges) edges.push_back({{"ends", e.ends}, {"m", e.multiplicity}, {"crossings", e.crossings}});
  return {{"black", g.black_faces.size()},
          {"white", g.white_faces.size()},
          {"white_valences", g.white_valences},
          {"black_valences", g.black_valences},
          {"reduced_edges", edges},
          {"tree", check_tree(g.reduced_black)},
          {"multiplicities_at_least_two", check_multiplicity_lemma(g)}};
}

json to_json(const TorusSumDecomposition& t) {
  json out = json::array();
  for (const auto& s : t.summands) out.push_back({{"k", s.k}, {"sign", sign_text(s.sign)}, {"edge", s.edge}});
  return out;
}

json to_json(const AlexanderPolynomial& a) { return {{"g", a.g}, {"coeffs", coeffs_json(a.coeffs)}}; }

json to_json(const InvariantReport& r) {
  return {{"alexander", to_json(r.alexander)}, {"genus", r.genus},
          {"fibered", r.fibered},             {"signature", r.signature},
          {"tau_alternating", r.tau_alternating}, {"sqp_fibered", r.sqp_fibered},
          {"determinant", to_json(r.determinant)}};
}

json to_json(const HFPlusDescriptor& h) { return {{"s", h.s}, {"b", to_json(h.b)}, {"delta", h.delta_exp}}; }

json to_json(const AgBoundResult& r) {
  return {{"case", std::string(to_string(r.which))}, {"pass", r.pass}, {"equality", r.equality},
          {"lhs", to_json(r.lhs)},                  {"rhs", to_json(r.rhs)}};
}

json to_json(const TrapezoidReport& t) {
  return {{"monotone_ok", t.monotone_ok},
          {"plateau_ok", t.plateau_ok},
          {"first_violation", t.first_violation ? json(*t.first_violation) : json(nullptr)},
          {"top_equality", t.top_equality}};
}

json to_json(const TheoremReport& t, bool with_timing) {
  json out{{"name", t.name},
           {"g", t.g},
           {"a_g", to_json(t.a_g)},
           {"a_g_minus_1", to_json(t.a_g_minus_1)},
           {"hypothesis_met", t.hypothesis_met},
           {"mirrored", t.mirrored},
           {"verdict", t.verdict_text()},
           {"summands", to_json(TorusSumDecomposition{t.summands})},
           {"diagnostics", t.diagnostics}};
  if (with_timing) out["elapsed_ms"] = t.elapsed_ms;
  return out;
}

json to_json(const Lemma37Report& l) {
  return {{"nested", l.nested}, {"both_sides", l.both_sides}, {"sqp_fibered", l.sqp_fibered}, {"consistent", l.consistent()}};
}

json to_json(const CorpusSummary& s) {
  json records = json::array();
  for (const auto& r : s.records) {
    json checks = json::object();
    for (const auto& c : r.checks) checks[c.check] = {{"status", std::string(to_string(c.status))}, {"detail", c.detail}};
    records.push_back({{"name", r.name}, {"checks", checks}});
  }
  json skipped = json::array();
  for (const auto& e : s.skipped) skipped.push_back({{"line", e.line}, {"message", e.message}});
  return {{"checks", s.checks}, {"records", records}, {"skipped", skipped}, {"failures", s.failures()}};
}

namespace {

json analyze_unwrapped(const KnotRecord& r) {
  const auto d = build_diagram(r.pd);
  const auto inv = invariant_report(d);
  const auto s = seifert_circles(d);

  json out{{"name", r.name}, {"pd", r.pd_text}, {"diagram", to_json(d)}};
  out["seifert"] = to_json(s);
  out["seifert"]["genus"] = surface_genus(s, 1);
  out.update(to_json(inv));

  if (is_special(d)) {
    auto g = to_json(checkerboard(d));
    g["fibered"] = is_fibered_special(d);
    g["summands"] = nullptr;
    if (g["fibered"] && g["tree"] && g["multiplicities_at_least_two"]) g["summands"] = to_json(torus_sum_decomposition(d));
    out["graphs"] = g;
  } else {
    out["graphs"] = nullptr;
  }
  json pieces = json::array();
  for (const auto& p : murasugi_decompose(d))
    pieces.push_back({{"pd", to_string(p.to_pd())},
                      {"crossings", p.crossing_count()},
                      {"components", p.component_count()},
                      {"fibered_special", is_fibered_special(p)}});
  out["decomposition"] = pieces;

  const auto& a = inv.alexander;
  out["ag_bound"] = a.g >= 1 ? to_json(check_ag_bound(a, inv.tau_alternating)) : json(nullptr);
  out["trapezoid"] = to_json(check_trapezoidal(a));
  json hf = json::array();
  for (int k = 1; k <= a.g + 1; ++k) hf.push_back(to_json(hf_plus_descriptor(a, inv.tau_alternating, k)));
  out["hf_plus"] = hf;
  out["theorem"] = a.g >= 1 && is_reduced(d) ? to_json(verify_main_theorem(d, r.name), false) : json(nullptr);
  out["lemma37"] = to_json(lemma37_check(d));

  json mismatches = json::array();
  if (r.alexander && *r.alexander != a.coeffs) mismatches.push_back("alexander");
  if (r.signature && *r.signature != inv.signature) mismatches.push_back("signature");
  if (r.genus && *r.genus != inv.genus) mismatches.push_back("genus");
  if (r.fibered && *r.fibered != inv.fibered) mismatches.push_back("fibered");
  out["reference_mismatches"] = mismatches;
  return out;
}

}  // namespace

json analyze(const KnotRecord& r) {
  try {
    return analyze_unwrapped(r);
  } catch (const Error& e) {
    throw Error(e.code(), r.name + ": " + e.message());
  }
}

const json& report_schema() {
  static const json schema = json::parse(R"json(
{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "knotscope analyze report",
  "type": "object",
  "$defs": {
    "int": {"type": ["integer", "string"]},
    "ints": {"type": "array", "items": {"type": "integer"}},
    "summands": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["k", "sign"],
        "properties": {"k": {"type": "integer", "minimum": 2}, "sign": {"enum": ["+", "-"]}, "edge": {"type": "integer"}}
      }
    }
  },
  "required": ["name", "pd", "diagram", "seifert", "graphs", "decomposition", "alexander", "genus", "fibered",
               "signature", "tau_alternating", "sqp_fibered", "determinant", "ag_bound", "trapezoid", "hf_plus",
               "theorem", "lemma37", "reference_mismatches"],
  "properties": {
    "name": {"type": "string"},
    "pd": {"type": "string"},
    "diagram": {
      "type": "object",
      "required": ["pd", "crossings", "components", "arcs", "faces", "signs", "writhe", "alternating", "reduced", "connected"],
      "properties": {
        "crossings": {"type": "integer", "minimum": 0},
        "components": {"type": "integer", "minimum": 1},
        "signs": {"type": "array", "items": {"enum": [-1, 1]}},
        "alternating": {"type": "boolean"},
        "reduced": {"type": "boolean"},
        "connected": {"type": "boolean"}
      }
    },
    "seifert": {
      "type": "object",
      "required": ["circles", "bands", "groups", "euler", "genus", "nested", "extremal", "side_counts", "special"],
      "properties": {
        "circles": {"type": "array", "items": {"type": "object", "required": ["id", "arcs", "left_region", "right_region"]}},
        "bands": {"type": "array", "items": {"type": "object", "required": ["crossing", "circles", "sign", "region"]}},
        "groups": {"type": "array", "items": {"type": "object", "required": ["circles", "crossings", "region", "parallel"]}},
        "euler": {"type": "integer"},
        "genus": {"type": "integer", "minimum": 0},
        "nested": {"$ref": "#/$defs/ints"},
        "extremal": {"$ref": "#/$defs/ints"},
        "special": {"type": "boolean"}
      }
    },
    "graphs": {
      "oneOf": [
        {"type": "null"},
        {
          "type": "object",
          "required": ["black", "white", "white_valences", "black_valences", "reduced_edges", "tree",
                       "multiplicities_at_least_two", "fibered", "summands"],
          "properties": {
            "black": {"type": "integer", "minimum": 1},
            "white_valences": {"$ref": "#/$defs/ints"},
            "reduced_edges": {
              "type": "array",
              "items": {"type": "object", "required": ["ends", "m", "crossings"], "properties": {"m": {"type": "integer", "minimum": 1}}}
            },
            "summands": {"oneOf": [{"type": "null"}, {"$ref": "#/$defs/summands"}]}
          }
        }
      ]
    },
    "decomposition": {
      "type": "array",
      "items": {"type": "object", "required": ["pd", "crossings", "components", "fibered_special"]}
    },
    "alexander": {
      "type": "object",
      "required": ["g", "coeffs"],
      "properties": {"g": {"type": "integer", "minimum": 0}, "coeffs": {"type": "array", "items": {"$ref": "#/$defs/int"}, "minItems": 1}}
    },
    "genus": {"type": "integer", "minimum": 0},
    "fibered": {"type": "boolean"},
    "signature": {"type": "integer"},
    "tau_alternating": {"type": "integer"},
    "sqp_fibered": {"type": "boolean"},
    "determinant": {"$ref": "#/$defs/int"},
    "ag_bound": {
      "oneOf": [
        {"type": "null"},
        {
          "type": "object",
          "required": ["case", "pass", "equality", "lhs", "rhs"],
          "properties": {"case": {"enum": ["tau=g", "tau=g-1", "otherwise"]}, "pass": {"type": "boolean"}, "equality": {"type": "boolean"}}
        }
      ]
    },
    "trapezoid": {
      "type": "object",
      "required": ["monotone_ok", "plateau_ok", "first_violation", "top_equality"],
      "properties": {"first_violation": {"type": ["integer", "null"]}}
    },
    "hf_plus": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["s", "b", "delta"],
        "properties": {"s": {"type": "integer", "minimum": 1}, "b": {"$ref": "#/$defs/int"}, "delta": {"type": "integer", "minimum": 0}}
      }
    },
    "theorem": {
      "oneOf": [
        {"type": "null"},
        {
          "type": "object",
          "required": ["name", "g", "a_g", "a_g_minus_1", "hypothesis_met", "mirrored", "verdict", "summands", "diagnostics"],
          "properties": {
            "verdict": {"type": "string", "pattern": "^(confirmed-T\\([0-9]+,2\\)|hypothesis-not-satisfied|FAILED)$"},
            "summands": {"$ref": "#/$defs/summands"},
            "diagnostics": {"type": "array", "items": {"type": "string"}}
          }
        }
      ]
    },
    "lemma37": {
      "type": "object",
      "required": ["nested", "both_sides", "sqp_fibered", "consistent"],
      "properties": {"consistent": {"type": "boolean"}}
    },
    "reference_mismatches": {"type": "array", "items": {"enum": ["alexander", "signature", "genus", "fibered"]}}
  }
}
)json");
  return schema;
}

}  // namespace knotscope
