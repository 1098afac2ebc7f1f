#pragma once

#include <json.hpp>

#include "knotscope/corpus.hpp"
#include "knotscope/diagram.hpp"
#include "knotscope/floer.hpp"
#include "knotscope/graphs.hpp"
#include "knotscope/invariants.hpp"
#include "knotscope/seifert.hpp"
#include "knotscope/verify.hpp"

namespace knotscope {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const SeifertStructure& s);
nlohmann::json to_json(const CheckerboardGraphs& g);
nlohmann::json to_json(const TorusSumDecomposition& t);
nlohmann::json to_json(const AlexanderPolynomial& a);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const HFPlusDescriptor& h);
nlohmann::json to_json(const AgBoundResult& r);
nlohmann::json to_json(const TrapezoidReport& t);
nlohmann::json to_json(const TheoremReport& t, bool with_timing = true);
nlohmann::json to_json(const Lemma37Report& l);
nlohmann::json to_json(const CorpusSummary& s);

// Full report for one knot. Module errors are rethrown with the knot name.
nlohmann::json analyze(const KnotRecord& r);

// JSON Schema (draft 2020-12) that every analyze() report satisfies.
const nlohmann::json& report_schema();

}  // namespace knotscope
