#include "hyperwalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperwalk/error.hpp"

namespace hyperwalk::io {

namespace {

std::string at(const std::string& origin, const std::string& pointer) {
  return origin + ":" + (pointer.empty() ? "/" : pointer);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& doc, const char* key, const std::string& origin,
                  const std::string& pointer = "") {
  if (!doc.is_object()) throw ParseError(at(origin, pointer), "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(at(origin, pointer + "/" + key), "missing required field");
  }
  return *it;
}

int as_int(const Json& v, const std::string& origin, const std::string& pointer) {
  if (!v.is_number_integer()) throw ParseError(at(origin, pointer), "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw ParseError(at(origin, pointer), "integer out of range");
  return static_cast<int>(x);
}

Rational as_rational(const Json& v, const std::string& origin, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) {
    throw ParseError(at(origin, pointer), "expected an exact rational string such as \"241/128\"");
  }
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(at(origin, pointer), e.what());
  }
}

std::array<int, 3> as_triple(const Json& v, const std::string& origin, const std::string& pointer) {
  if (!v.is_array() || v.size() != 3) {
    throw ParseError(at(origin, pointer), "expected an array of three vertices");
  }
  return {as_int(v[0], origin, pointer + "/0"), as_int(v[1], origin, pointer + "/1"),
          as_int(v[2], origin, pointer + "/2")};
}

// "1,2", "1-2" or "12" (single digits).
std::vector<int> parse_key(const std::string& key, std::size_t arity, const std::string& origin,
                           const std::string& pointer) {
  std::vector<int> out;
  if (key.find_first_of(",-") != std::string::npos) {
    std::string token;
    std::istringstream in(key);
    while (std::getline(in, token, key.find(',') != std::string::npos ? ',' : '-')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        out.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(at(origin, pointer), "bad vertex '" + token + "' in key '" + key + "'");
      }
    }
  } else {
    for (char c : key) {
      if (c < '1' || c > '9') {
        throw ParseError(at(origin, pointer), "bad key '" + key + "'");
      }
      out.push_back(c - '0');
    }
  }
  if (out.size() != arity) {
    throw ParseError(at(origin, pointer),
                     "key '" + key + "' should name " + std::to_string(arity) + " vertices");
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string key_of(const Pair& p) { return std::to_string(p.a) + "," + std::to_string(p.b); }
std::string key_of(const Triple& t) {
  return std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1),
                     "malformed JSON");
  }
}

Json read_json(const std::string& path) { return parse_json_text(slurp(path), path); }

PatternHypergraph pattern_from_json(const Json& doc, const std::string& origin) {
  const int kappa = as_int(field(doc, "kappa", origin), origin, "/kappa");
  const Json& triples = field(doc, "triples", origin);
  if (!triples.is_array()) throw ParseError(at(origin, "/triples"), "expected an array");
  std::vector<std::array<int, 3>> list;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    list.push_back(as_triple(triples[i], origin, "/triples/" + std::to_string(i)));
  }
  bool directed = false;
  if (auto it = doc.find("directed"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError(at(origin, "/directed"), "expected a boolean");
    directed = it->get<bool>();
  }
  try {
    return PatternHypergraph(kappa, list, directed);
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

LoadingSchedule schedule_from_json(const Json& doc, const std::string& origin) {
  const Json* list = &doc;
  std::string base;
  if (doc.is_object()) {
    list = &field(doc, "schedule", origin);
    base = "/schedule";
  }
  if (!list->is_array()) throw ParseError(at(origin, base), "expected an array of elements");
  LoadingSchedule out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string pointer = base + "/" + std::to_string(i);
    const Json& e = (*list)[i];
    if (!e.is_string()) throw ParseError(at(origin, pointer), "expected an element like \"p12\"");
    try {
      out.push_back(ScheduleElement::parse(e.get<std::string>()));
    } catch (const Error& err) {
      throw ParseError(at(origin, pointer), err.what());
    }
  }
  return out;
}

ParameterExponents params_from_json(const Json& doc, const std::string& origin) {
  ParameterExponents out;
  for (const char* group : {"x", "y", "z"}) {
    const Json& g = field(doc, group, origin);
    const std::string gp = std::string("/") + group;
    if (!g.is_object()) throw ParseError(at(origin, gp), "expected an object");
    for (const auto& [key, value] : g.items()) {
      const std::string pointer = gp + "/" + key;
      const Rational r = as_rational(value, origin, pointer);
      const std::size_t arity = group[0] == 'x' ? 1 : group[0] == 'y' ? 2 : 3;
      const auto v = parse_key(key, arity, origin, pointer);
      bool fresh = true;
      try {
        if (arity == 1) {
          fresh = out.x.emplace(v[0], r).second;
        } else if (arity == 2) {
          fresh = out.y.emplace(Pair::of(v[0], v[1]), r).second;
        } else {
          fresh = out.z.emplace(Triple::of(v[0], v[1], v[2]), r).second;
        }
      } catch (const Error& e) {
        throw ParseError(at(origin, pointer), e.what());
      }
      if (!fresh) throw ParseError(at(origin, pointer), "duplicate key");
    }
  }
  return out;
}

InstanceHypergraph instance_from_json(const Json& doc, const std::string& origin) {
  const int n = as_int(field(doc, "n", origin), origin, "/n");
  bool directed = false;
  if (auto it = doc.find("directed"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError(at(origin, "/directed"), "expected a boolean");
    directed = it->get<bool>();
  }
  const Json& edges = field(doc, "hyperedges", origin);
  if (!edges.is_array()) throw ParseError(at(origin, "/hyperedges"), "expected an array");
  const Json* weights = nullptr;
  if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != edges.size()) {
      throw ParseError(at(origin, "/weights"), "expected an array aligned with hyperedges");
    }
    weights = &*it;
  }
  InstanceHypergraph out(n, directed);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string pointer = "/hyperedges/" + std::to_string(i);
    const auto t = as_triple(edges[i], origin, pointer);
    std::optional<int> w;
    if (weights) w = as_int((*weights)[i], origin, "/weights/" + std::to_string(i));
    try {
      out.add(t, w);
    } catch (const DomainError& e) {
      throw ValidationError(at(origin, pointer) + ": " + e.what());
    }
  }
  return out;
}

TernaryOperator operator_from_json(const Json& doc, const std::string& origin) {
  const int n = as_int(field(doc, "n", origin), origin, "/n");
  const Json& table = field(doc, "table", origin);
  if (!table.is_array()) throw ParseError(at(origin, "/table"), "expected an array");
  std::vector<int> values;
  values.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    values.push_back(as_int(table[i], origin, "/table/" + std::to_string(i)));
  }
  try {
    return TernaryOperator(n, std::move(values));
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

PatternHypergraph parse_pattern(const std::string& path) {
  return pattern_from_json(read_json(path), path);
}
LoadingSchedule parse_schedule(const std::string& path) {
  return schedule_from_json(read_json(path), path);
}
ParameterExponents parse_params(const std::string& path) {
  return params_from_json(read_json(path), path);
}
InstanceHypergraph parse_instance(const std::string& path) {
  return instance_from_json(read_json(path), path);
}
TernaryOperator parse_operator(const std::string& path) {
  return operator_from_json(read_json(path), path);
}

Json exact(const Rational& value) { return value.str(); }
Json exact(const BigRational& value) { return to_string(value); }

double round6(double value) {
  if (!std::isfinite(value) || value == 0) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const PatternHypergraph& pattern) {
  Json triples = Json::array();
  if (pattern.directed()) {
    for (const auto& d : pattern.directions()) triples.push_back(d);
  } else {
    for (const Triple& t : pattern.triples()) triples.push_back(t.vertices());
  }
  return Json{{"kappa", pattern.kappa()}, {"triples", triples}, {"directed", pattern.directed()}};
}

Json to_json(const LoadingSchedule& schedule) {
  Json out = Json::array();
  for (const auto& e : schedule) out.push_back(e.str());
  return out;
}

Json to_json(const ParameterExponents& params) {
  Json x = Json::object(), y = Json::object(), z = Json::object();
  for (const auto& [v, r] : params.x) x[std::to_string(v)] = exact(r);
  for (const auto& [p, r] : params.y) y[key_of(p)] = exact(r);
  for (const auto& [t, r] : params.z) z[key_of(t)] = exact(r);
  return Json{{"x", x}, {"y", y}, {"z", z}};
}

Json to_json(const InstanceHypergraph& instance) {
  Json edges = Json::array();
  Json weights = Json::array();
  for (const auto& t : instance.hyperedges()) {
    edges.push_back(t);
    if (instance.weighted()) {
      const auto w = instance.weight(t);
      weights.push_back(w ? Json(*w) : Json());
    }
  }
  Json out{{"n", instance.n()}, {"hyperedges", edges}, {"directed", instance.directed()}};
  if (instance.weighted()) out["weights"] = weights;
  return out;
}

Json to_json(const TernaryOperator& op) { return Json{{"n", op.n()}, {"table", op.table()}}; }

Json to_json(const CostBreakdown& cost) {
  Json levels = Json::array();
  for (const auto& lv : cost.levels) {
    levels.push_back(Json{{"t", lv.t},
                          {"element", lv.element.str()},
                          {"epsilon", exact(lv.epsilon)},
                          {"cumulative_epsilon", exact(lv.cumulative_epsilon)},
                          {"delta", exact(lv.delta)},
                          {"update", exact(lv.update)},
                          {"total", exact(lv.total)}});
  }
  return Json{{"overall", exact(cost.overall)},
              {"setup", exact(cost.setup_exponent)},
              {"levels", levels}};
}

Json to_json(const AdmissibilityReport& report) {
  Json conditions = Json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back(Json{{"id", c.id},
                              {"slack", exact(c.slack)},
                              {"strict", c.strict},
                              {"relaxed", c.relaxed},
                              {"satisfied", c.satisfied}});
  }
  Json failures = Json::array();
  for (const auto& c : report.failures()) failures.push_back(c.id);
  return Json{{"strict_ok", report.strict_ok},
              {"relax_vertex", report.relaxed_vertex},
              {"failures", failures},
              {"conditions", conditions}};
}

Json to_json(const AssocCertificate& cert) {
  return Json{{"case", to_string(cert.which)}, {"tuple", cert.a}};
}

namespace {

Json point_json(const TailBoundReport::Point& p) {
  return Json{{"N", p.params.N},
              {"m", p.params.m},
              {"r", p.params.r},
              {"bound", static_cast<int>(p.bound)},
              {"delta", exact(p.delta)},
              {"tail", exact(p.tail)},
              {"tail_approx", round6(p.tail.get_d())},
              {"bound_lower_approx", round6(p.bound_lower.get_d())},
              {"holds", p.holds}};
}

}  // namespace

Json to_json(const TailBoundReport& report) {
  Json violations = Json::array();
  for (const auto& p : report.violations) violations.push_back(point_json(p));
  Json tightest = Json::array();
  for (int b = 0; b < 3; ++b) {
    Json t = report.tightest_ratio[b] > 0 ? point_json(report.tightest[b]) : Json();
    if (!t.is_null()) t["ratio"] = round6(report.tightest_ratio[b]);
    tightest.push_back(t);
  }
  return Json{{"grid", report.grid},
              {"checked", Json::array({report.checked[0], report.checked[1], report.checked[2]})},
              {"skipped", report.skipped},
              {"violations", violations},
              {"tightest", tightest},
              {"pass", report.pass()}};
}

Json to_json(const Lemma3Report& r) {
  return Json{{"trials", r.trials},
              {"frequency", round6(r.frequency)},
              {"bound", round6(r.threshold)},
              {"floor", round6(r.floor)},
              {"max_observed", r.max_observed},
              {"frequency_log2", round6(r.frequency_log2)},
              {"bound_log2", round6(r.threshold_log2)},
              {"floor_log2", round6(r.floor_log2)},
              {"pass", r.pass}};
}

Json to_json(const RegularityReport& r) {
  return Json{{"trials", r.trials},
              {"failures", r.failures},
              {"frequency", round6(r.frequency)},
              {"wilson", Json::array({round6(r.wilson_low), round6(r.wilson_high)})},
              {"bound", round6(r.failure_bound)},
              {"vacuous", r.vacuous},
              {"warnings", r.warnings},
              {"pass", r.pass}};
}

Json to_json(const SwapReport& r) {
  return Json{{"trials", r.trials},
              {"exceed", r.exceed},
              {"frequency", round6(r.frequency)},
              {"wilson", Json::array({round6(r.wilson_low), round6(r.wilson_high)})},
              {"threshold", round6(r.threshold)},
              {"bound", round6(r.lemma_bound)},
              {"max_delta", r.max_delta},
              {"pass", r.pass}};
}

}  // namespace hyperwalk::io
