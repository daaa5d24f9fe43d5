#pragma once

#include <string>

#include <json.hpp>

#include "hyperwalk/assoc.hpp"
#include "hyperwalk/complexity_model.hpp"
#include "hyperwalk/lp_solver.hpp"
#include "hyperwalk/oracle.hpp"
#include "hyperwalk/pattern.hpp"
#include "hyperwalk/stats.hpp"
#include "hyperwalk/walk_sim.hpp"

namespace hyperwalk::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError with "path:line:col" on
/// malformed input and ParseError with the path if unreadable.
Json read_json(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

// Each parser accepts the parsed document plus an origin used in
// diagnostics ("file.json" -> "file.json:/triples/2").

/// {"kappa": 4, "triples": [[1,2,3], ...], "directed": false}
PatternHypergraph pattern_from_json(const Json& doc, const std::string& origin);
/// {"schedule": ["v1", "p12", "t123", ...]} or a bare array.
LoadingSchedule schedule_from_json(const Json& doc, const std::string& origin);
/// {"x": {"1": "1/2"}, "y": {"1,2": "5/4"}, "z": {"1,2,3": "241/128"}};
/// "12" and "123" are accepted for single-digit vertices.
ParameterExponents params_from_json(const Json& doc, const std::string& origin);
/// {"n": 15, "hyperedges": [[u,v,w], ...], "directed": false,
///  "weights": [w, ...]} with weights aligned to hyperedges.
InstanceHypergraph instance_from_json(const Json& doc, const std::string& origin);
/// {"n": 3, "table": [n^3 values, row-major]}
TernaryOperator operator_from_json(const Json& doc, const std::string& origin);

PatternHypergraph parse_pattern(const std::string& path);
LoadingSchedule parse_schedule(const std::string& path);
ParameterExponents parse_params(const std::string& path);
InstanceHypergraph parse_instance(const std::string& path);
TernaryOperator parse_operator(const std::string& path);

Json to_json(const PatternHypergraph& pattern);
Json to_json(const LoadingSchedule& schedule);
Json to_json(const ParameterExponents& params);
Json to_json(const InstanceHypergraph& instance);
Json to_json(const TernaryOperator& op);
Json to_json(const CostBreakdown& cost);
Json to_json(const AdmissibilityReport& report);
Json to_json(const AssocCertificate& cert);
Json to_json(const TailBoundReport& report);
Json to_json(const Lemma3Report& report);
Json to_json(const RegularityReport& report);
Json to_json(const SwapReport& report);

/// Rational as "p/q" (or "p").
Json exact(const Rational& value);
Json exact(const BigRational& value);
/// Rounded to 6 significant digits.
double round6(double value);

/// Pretty JSON followed by a newline.
std::string dump(const Json& doc);

}  // namespace hyperwalk::io
