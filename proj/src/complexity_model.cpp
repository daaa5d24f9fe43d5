#include "hyperwalk/complexity_model.hpp"

#include <algorithm>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

namespace {

std::string digits(const Pair& p) { return ScheduleElement::of(p).str().substr(1); }
std::string digits(const Triple& t) { return ScheduleElement::of(t).str().substr(1); }

const Rational kHalf(1, 2);

}  // namespace

VariableIndex::VariableIndex(const PatternHypergraph& pattern) : pattern_(&pattern) {
  for (int v = 1; v <= pattern.kappa(); ++v) names_.push_back("x" + std::to_string(v));
  for (const Pair& p : pattern.pairs()) names_.push_back("y" + digits(p));
  for (const Triple& t : pattern.triples()) names_.push_back("z" + digits(t));
}

std::size_t VariableIndex::x(int vertex) const {
  if (vertex < 1 || vertex > pattern_->kappa()) {
    throw KeyMismatch("no vertex " + std::to_string(vertex) + " in pattern");
  }
  return static_cast<std::size_t>(vertex - 1);
}

std::size_t VariableIndex::y(const Pair& pair) const {
  const auto i = pattern_->pair_index(pair);
  if (!i) throw KeyMismatch("pair " + digits(pair) + " is not in Sigma_2");
  return static_cast<std::size_t>(pattern_->kappa()) + *i;
}

std::size_t VariableIndex::z(const Triple& triple) const {
  const auto i = pattern_->triple_index(triple);
  if (!i) throw KeyMismatch("triple " + digits(triple) + " is not in Sigma_3");
  return static_cast<std::size_t>(pattern_->kappa()) + pattern_->pairs().size() + *i;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& rhs) {
  for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] += rhs.coeff[k];
  constant += rhs.constant;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& rhs) {
  for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] -= rhs.coeff[k];
  constant -= rhs.constant;
  return *this;
}

LinearExpr& LinearExpr::scale(const Rational& factor) {
  for (auto& c : coeff) c *= factor;
  constant *= factor;
  return *this;
}

Rational LinearExpr::evaluate(std::span<const Rational> values) const {
  Rational out = constant;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (!coeff[k].is_zero()) out += coeff[k] * values[k];
  }
  return out;
}

std::string LinearExpr::str(const VariableIndex& index) const {
  std::string out;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const Rational& c = coeff[k];
    if (c.is_zero()) continue;
    out += (c.sign() < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + "));
    const Rational mag = abs(c);
    if (mag != Rational(1)) out += mag.str() + "*";
    out += index.name(k);
  }
  if (!constant.is_zero() || out.empty()) {
    if (out.empty()) return constant.str();
    out += (constant.sign() < 0 ? " - " : " + ") + abs(constant).str();
  }
  return out;
}

void ParameterExponents::check_keys(const PatternHypergraph& pattern) const {
  std::vector<int> want_x;
  for (int v = 1; v <= pattern.kappa(); ++v) want_x.push_back(v);
  std::vector<int> have_x;
  for (const auto& [k, _] : x) have_x.push_back(k);
  if (have_x != want_x) throw KeyMismatch("vertex exponents must be keyed by 1..kappa");
  std::vector<Pair> have_y;
  for (const auto& [k, _] : y) have_y.push_back(k);
  if (have_y != pattern.pairs()) throw KeyMismatch("pair exponents must be keyed by Sigma_2");
  std::vector<Triple> have_z;
  for (const auto& [k, _] : z) have_z.push_back(k);
  if (have_z != pattern.triples()) throw KeyMismatch("triple exponents must be keyed by Sigma_3");
}

std::vector<Rational> ParameterExponents::to_vector(const VariableIndex& index,
                                                    const PatternHypergraph& pattern) const {
  check_keys(pattern);
  std::vector<Rational> out(index.size());
  for (const auto& [v, value] : x) out[index.x(v)] = value;
  for (const auto& [p, value] : y) out[index.y(p)] = value;
  for (const auto& [t, value] : z) out[index.z(t)] = value;
  return out;
}

ParameterExponents ParameterExponents::from_vector(const PatternHypergraph& pattern,
                                                   std::span<const Rational> values) {
  const VariableIndex index(pattern);
  if (values.size() < index.size()) throw KeyMismatch("parameter vector too short");
  ParameterExponents out;
  for (int v = 1; v <= pattern.kappa(); ++v) out.x[v] = values[index.x(v)];
  for (const Pair& p : pattern.pairs()) out.y[p] = values[index.y(p)];
  for (const Triple& t : pattern.triples()) out.z[t] = values[index.z(t)];
  return out;
}

LinearExpr triple_capacity(const VariableIndex& index, const Triple& triple) {
  LinearExpr e(index.size());
  for (const Pair& p : triple.pairs()) e.add(index.y(p), 1);
  for (int v : triple.vertices()) e.add(index.x(v), -1);
  return e;
}

std::vector<LevelTerms> level_terms(const PatternHypergraph& pattern,
                                    const LoadingSchedule& schedule) {
  if (auto report = is_valid_schedule(pattern, schedule); !report) {
    throw InvalidSchedule("invalid schedule " + to_string(schedule) + ": clause (" +
                          to_string(*report.clause) + ") " + report.message);
  }
  const VariableIndex index(pattern);
  const std::size_t width = index.size();
  std::vector<LevelTerms> out;
  out.reserve(schedule.size());
  for (const ScheduleElement& e : schedule) {
    LevelTerms level{e, LinearExpr(width), LinearExpr(width), {}, {}};
    level.update_branches.emplace_back(width);
    level.branch_labels.emplace_back("1");
    switch (e.kind()) {
      case ScheduleElement::Kind::Vertex: {
        // eps = r_i/n, delta = 1/r_i, U = 1 + sum e_ijk/r_i.
        const int i = e.vertex_index();
        level.epsilon.constant = kHalf;
        level.epsilon.add(index.x(i), -kHalf);
        level.delta.add(index.x(i), kHalf);
        for (const Triple& t : pattern.triples()) {
          if (!t.contains(i)) continue;
          LinearExpr branch(width);
          branch.add(index.z(t), 1).add(index.x(i), -1);
          level.update_branches.push_back(std::move(branch));
          level.branch_labels.push_back("e" + digits(t) + "/r" + std::to_string(i));
        }
        break;
      }
      case ScheduleElement::Kind::Pair: {
        // eps = f_ij/(r_i r_j), delta = 1/f_ij, U = 1 + sum_k e_ijk/f_ij.
        const Pair p = e.as_pair();
        level.epsilon.add(index.x(p.a), kHalf).add(index.x(p.b), kHalf).add(index.y(p), -kHalf);
        level.delta.add(index.y(p), kHalf);
        for (const Triple& t : pattern.triples()) {
          if (!t.contains(p)) continue;
          LinearExpr branch(width);
          branch.add(index.z(t), 1).add(index.y(p), -1);
          level.update_branches.push_back(std::move(branch));
          level.branch_labels.push_back("e" + digits(t) + "/f" + digits(p));
        }
        break;
      }
      case ScheduleElement::Kind::Triple: {
        // eps = e_ijk/M_ijk, delta = 1/e_ijk, U = O(1).
        const Triple t = e.as_triple();
        level.epsilon = triple_capacity(index, t);
        level.epsilon.add(index.z(t), -1);
        level.epsilon.scale(kHalf);
        level.delta.add(index.z(t), kHalf);
        break;
      }
    }
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<AdmissibilityConstraint> admissibility_constraints(const PatternHypergraph& pattern,
                                                               bool relax_vertex) {
  const VariableIndex index(pattern);
  const std::size_t width = index.size();
  std::vector<AdmissibilityConstraint> out;
  auto push = [&](std::string id, LinearExpr slack, bool strict, bool relaxed = false) {
    out.push_back({std::move(id), std::move(slack), strict && !relaxed, relaxed});
  };
  for (int i = 1; i <= pattern.kappa(); ++i) {
    LinearExpr nonneg(width);
    nonneg.add(index.x(i), 1);
    push("x" + std::to_string(i) + ">=0", std::move(nonneg), false);
    LinearExpr room(width);  // n / r_i
    room.constant = 1;
    room.add(index.x(i), -1);
    push("n/r" + std::to_string(i) + ">n^g", std::move(room), true, relax_vertex);
  }
  for (const Pair& p : pattern.pairs()) {
    const std::string d = digits(p);
    LinearExpr cap(width);  // r_i r_j / f_ij >= 1
    cap.add(index.x(p.a), 1).add(index.x(p.b), 1).add(index.y(p), -1);
    push("r" + std::to_string(p.a) + "r" + std::to_string(p.b) + "/f" + d + ">=1", std::move(cap),
         false);
    for (int v : {p.a, p.b}) {
      LinearExpr deg(width);  // f_ij / r_v
      deg.add(index.y(p), 1).add(index.x(v), -1);
      push("f" + d + "/r" + std::to_string(v) + ">n^g", std::move(deg), true);
    }
  }
  for (const Triple& t : pattern.triples()) {
    const std::string d = digits(t);
    LinearExpr nonneg(width);
    nonneg.add(index.z(t), 1);
    push("e" + d + ">=1", std::move(nonneg), false);
    LinearExpr cap = triple_capacity(index, t);  // M_ijk / e_ijk >= 1
    cap.add(index.z(t), -1);
    push("M" + d + "/e" + d + ">=1", std::move(cap), false);
    // f_ij f_ik / (r_i r_j r_k) for each choice of the shared vertex.
    for (int shared : t.vertices()) {
      LinearExpr slack(width);
      for (const Pair& p : t.pairs()) {
        if (p.contains(shared)) slack.add(index.y(p), 1);
      }
      for (int v : t.vertices()) slack.add(index.x(v), -1);
      std::string id = "f*f/r^3[" + d + ",shared " + std::to_string(shared) + "]>n^g";
      push(std::move(id), std::move(slack), true);
    }
  }
  return out;
}

std::vector<AdmissibilityReport::Condition> AdmissibilityReport::failures() const {
  std::vector<Condition> out;
  std::copy_if(conditions.begin(), conditions.end(), std::back_inserter(out),
               [](const Condition& c) { return !c.satisfied; });
  return out;
}

AdmissibilityReport check_admissibility(const PatternHypergraph& pattern,
                                        const ParameterExponents& params, bool relax_vertex) {
  const VariableIndex index(pattern);
  const auto values = params.to_vector(index, pattern);
  AdmissibilityReport report;
  report.relaxed_vertex = relax_vertex;
  report.strict_ok = true;
  for (const auto& c : admissibility_constraints(pattern, relax_vertex)) {
    AdmissibilityReport::Condition cond{c.id, c.slack.evaluate(values), c.strict, c.relaxed, false};
    cond.satisfied = c.strict ? cond.slack.sign() > 0 : cond.slack.sign() >= 0;
    report.strict_ok = report.strict_ok && cond.satisfied;
    report.conditions.push_back(std::move(cond));
  }
  return report;
}

CostBreakdown cost_exponent(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                            const ParameterExponents& params) {
  const auto levels = level_terms(pattern, schedule);
  const VariableIndex index(pattern);
  const auto values = params.to_vector(index, pattern);
  CostBreakdown out;
  for (const Triple& t : pattern.triples()) {
    out.setup_exponent = max(out.setup_exponent, values[index.z(t)]);
  }
  out.overall = out.setup_exponent;
  Rational cumulative;
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const LevelTerms& lv = levels[t];
    CostBreakdown::Level row;
    row.t = t + 1;
    row.element = lv.element;
    row.epsilon = lv.epsilon.evaluate(values);
    cumulative += row.epsilon;
    row.cumulative_epsilon = cumulative;
    row.delta = lv.delta.evaluate(values);
    row.update = lv.update_branches.front().evaluate(values);
    for (const auto& branch : lv.update_branches) row.update = max(row.update, branch.evaluate(values));
    row.total = row.cumulative_epsilon + row.delta + row.update;
    out.overall = max(out.overall, row.total);
    out.levels.push_back(std::move(row));
  }
  return out;
}

}  // namespace hyperwalk
