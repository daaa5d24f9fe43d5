#include "hyperwalk/lp_solver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "hyperwalk/error.hpp"
#include "hyperwalk/schedule_enum.hpp"
#include "simplex.hpp"

namespace hyperwalk {

std::size_t LinearProgram::add_variable(std::string name) {
  variables.push_back(std::move(name));
  objective.emplace_back();
  for (auto& row : rows) row.coeffs.emplace_back();
  return variables.size() - 1;
}

std::size_t LinearProgram::add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs,
                                   std::string label) {
  if (coeffs.size() > variables.size()) {
    throw ValidationError("row '" + label + "' has " + std::to_string(coeffs.size()) +
                          " coefficients but only " + std::to_string(variables.size()) +
                          " variables are declared");
  }
  coeffs.resize(variables.size());
  rows.push_back({std::move(coeffs), relation, rhs, std::move(label)});
  return rows.size() - 1;
}

std::optional<std::size_t> LinearProgram::variable(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

void LinearProgram::remove_duplicate_rows() {
  std::vector<Row> kept;
  std::set<std::pair<std::vector<Rational>, std::pair<int, Rational>>> seen;
  for (auto& row : rows) {
    auto key = std::make_pair(row.coeffs, std::make_pair(static_cast<int>(row.relation), row.rhs));
    if (seen.insert(std::move(key)).second) kept.push_back(std::move(row));
  }
  rows = std::move(kept);
}

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

Rational row_value(const LinearProgram::Row& row, const std::vector<Rational>& v) {
  Rational s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!row.coeffs[j].is_zero() && !v[j].is_zero()) s += row.coeffs[j] * v[j];
  }
  return s;
}

void fill_tight_rows(const LinearProgram& lp, LPSolution& sol) {
  sol.tight_rows.clear();
  if (sol.status != LPStatus::Optimal) return;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (row_value(lp.rows[i], sol.witness) == lp.rows[i].rhs) sol.tight_rows.push_back(i);
  }
}

}  // namespace

LPSolution solve_exact(const LinearProgram& lp) {
  for (const auto& row : lp.rows) {
    if (row.coeffs.size() != lp.variables.size()) {
      throw ValidationError("row '" + row.label + "' does not match the variable count");
    }
  }
  if (lp.objective.size() != lp.variables.size()) {
    throw ValidationError("objective does not match the variable count");
  }
  LPSolution sol;
  try {
    sol = detail::Simplex<Rational>(lp).run();
  } catch (const RationalOverflow&) {
    sol = detail::Simplex<BigRational>(lp).run();
    sol.used_big_rationals = true;
  }
  fill_tight_rows(lp, sol);
  return sol;
}

bool verify_feasible(const LinearProgram& lp, const std::vector<Rational>& witness) {
  if (witness.size() != lp.variables.size()) return false;
  for (const Rational& v : witness) {
    if (v.sign() < 0) return false;
  }
  for (const auto& row : lp.rows) {
    const Rational lhs = row_value(row, witness);
    if (row.relation == Relation::LessEqual ? lhs > row.rhs : lhs != row.rhs) return false;
  }
  return true;
}

bool verify_optimality_certificate(const LinearProgram& lp, const LPSolution& solution) {
  if (solution.status != LPStatus::Optimal) return false;
  if (!verify_feasible(lp, solution.witness)) return false;
  if (solution.duals.size() != lp.rows.size()) return false;
  Rational dual_value;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].relation == Relation::LessEqual && solution.duals[i].sign() < 0) return false;
    dual_value -= lp.rows[i].rhs * solution.duals[i];
  }
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    Rational reduced = lp.objective[j];
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      if (!solution.duals[i].is_zero()) reduced += lp.rows[i].coeffs[j] * solution.duals[i];
    }
    if (reduced.sign() < 0) return false;
  }
  Rational primal_value;
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    primal_value += lp.objective[j] * solution.witness[j];
  }
  return primal_value == dual_value && primal_value == solution.optimum;
}

namespace {

// Rows of the exponent LP that do not depend on the schedule order.
class ExponentLPBuilder {
 public:
  ExponentLPBuilder(const PatternHypergraph& pattern, const ExponentLPOptions& options)
      : pattern_(pattern), index_(pattern) {
    for (const auto& name : index_.names()) base_.add_variable(name);
    t_col_ = base_.add_variable("T");
    base_.objective[t_col_] = 1;
    for (const auto& c : admissibility_constraints(pattern, options.relax_vertex)) {
      // slack >= 0  <=>  -(linear part) <= constant
      Rational rhs = c.slack.constant;
      if (options.margin && c.strict) rhs -= *options.margin;
      std::vector<Rational> coeffs(base_.variables.size());
      for (std::size_t k = 0; k < c.slack.coeff.size(); ++k) coeffs[k] = -c.slack.coeff[k];
      base_.add_row(std::move(coeffs), Relation::LessEqual, rhs, c.id);
    }
    for (const Triple& t : pattern.triples()) {
      std::vector<Rational> coeffs(base_.variables.size());
      coeffs[index_.z(t)] = 1;
      coeffs[t_col_] = -1;
      base_.add_row(std::move(coeffs), Relation::LessEqual, Rational(), "setup:z" +
                    ScheduleElement::of(t).str().substr(1));
    }
  }

  const LinearProgram& base() const { return base_; }

  // Appends the rows of level `t` (0-based), given the cumulative epsilon
  // through that level.
  void add_level(LinearProgram& lp, const LevelTerms& level, const LinearExpr& cumulative,
                 std::size_t t) const {
    for (std::size_t b = 0; b < level.update_branches.size(); ++b) {
      LinearExpr total = cumulative;
      total += level.delta;
      total += level.update_branches[b];
      std::vector<Rational> coeffs(lp.variables.size());
      for (std::size_t k = 0; k < total.coeff.size(); ++k) coeffs[k] = total.coeff[k];
      coeffs[t_col_] = -1;
      lp.add_row(std::move(coeffs), Relation::LessEqual, -total.constant,
                 "level " + std::to_string(t + 1) + " " + level.element.str() + " U=" +
                     level.branch_labels[b]);
    }
  }

  std::size_t t_col() const { return t_col_; }
  const VariableIndex& index() const { return index_; }

 private:
  const PatternHypergraph& pattern_;
  VariableIndex index_;
  LinearProgram base_;
  std::size_t t_col_ = 0;
};

}  // namespace

LinearProgram build_exponent_lp(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                                const ExponentLPOptions& options) {
  const auto levels = level_terms(pattern, schedule);
  ExponentLPBuilder builder(pattern, options);
  LinearProgram lp = builder.base();
  LinearExpr cumulative(builder.index().size());
  for (std::size_t t = 0; t < levels.size(); ++t) {
    cumulative += levels[t].epsilon;
    builder.add_level(lp, levels[t], cumulative, t);
  }
  lp.remove_duplicate_rows();
  return lp;
}

namespace {

bool strict_ok_at(const PatternHypergraph& pattern, const LPSolution& sol, bool relax_vertex) {
  if (sol.status != LPStatus::Optimal) return false;
  const VariableIndex index(pattern);
  std::vector<Rational> values(sol.witness.begin(), sol.witness.begin() + index.size());
  const auto params = ParameterExponents::from_vector(pattern, values);
  return check_admissibility(pattern, params, relax_vertex).strict_ok;
}

}  // namespace

ScheduleLPResult solve_schedule(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                                const Rational& margin, bool relax_vertex) {
  ScheduleLPResult out;
  out.schedule = schedule;
  out.margin = margin;
  ExponentLPOptions options;
  options.relax_vertex = relax_vertex;
  out.solution = solve_exact(build_exponent_lp(pattern, schedule, options));
  out.strict_ok = strict_ok_at(pattern, out.solution, relax_vertex);
  if (out.solution.status == LPStatus::Optimal && !out.strict_ok) {
    options.margin = margin;
    out.margin_solution = solve_exact(build_exponent_lp(pattern, schedule, options));
  }
  return out;
}

namespace {

struct SearchOutcome {
  Rational best;
  bool has_best = false;
  std::vector<std::vector<std::uint8_t>> argmins;
  std::uint64_t lps = 0;
};

// Completions of a downset, memoized; used to account for pruned subtrees.
class CompletionCounter {
 public:
  explicit CompletionCounter(const SchedulePoset& poset) : poset_(poset) {}

  std::uint64_t count(std::uint64_t mask) {
    if (mask == poset_.full_mask()) return 1;
    std::lock_guard<std::mutex> lock(mutex_);
    return count_locked(mask);
  }

 private:
  std::uint64_t count_locked(std::uint64_t mask) {
    if (mask == poset_.full_mask()) return 1;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < poset_.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((mask & bit) == 0 && (poset_.prerequisites(i) & ~mask) == 0) {
        total += count_locked(mask | bit);
      }
    }
    memo_.emplace(mask, total);
    return total;
  }

  const SchedulePoset& poset_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
  std::mutex mutex_;
};

// Depth-first branch and bound over linear extensions whose first element
// is `first`. The prefix LP (rows of the levels placed so far) is a lower
// bound for every completion, so a subtree is cut when it is strictly above
// the incumbent.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const PatternHypergraph& pattern, const SchedulePoset& poset,
                   const std::vector<LevelTerms>& terms_by_element, const OptimizeConfig& config,
                   CompletionCounter& counter)
      : poset_(poset),
        terms_(terms_by_element),
        config_(config),
        builder_(pattern, ExponentLPOptions{std::nullopt, config.relax_vertex}),
        counter_(counter) {}

  SearchOutcome run(std::size_t first, std::uint64_t& covered) {
    const std::size_t n = poset_.size();
    order_.assign(n, 0);
    lp_stack_.assign(n + 1, LinearProgram());
    cum_stack_.assign(n + 1, LinearExpr(builder_.index().size()));
    lp_stack_[0] = builder_.base();
    covered_ = 0;
    if (poset_.prerequisites(first) == 0) descend(0, 0, first);
    covered = covered_;
    return std::move(out_);
  }

 private:
  void descend(std::size_t depth, std::uint64_t mask, std::size_t element) {
    const std::size_t n = poset_.size();
    order_[depth] = static_cast<std::uint8_t>(element);
    mask |= std::uint64_t{1} << element;
    LinearProgram& lp = lp_stack_[depth + 1];
    lp = lp_stack_[depth];
    LinearExpr& cum = cum_stack_[depth + 1];
    cum = cum_stack_[depth];
    cum += terms_[element].epsilon;
    builder_.add_level(lp, terms_[element], cum, depth);
    const bool leaf = depth + 1 == n;
    if (leaf || (config_.prune && out_.has_best && should_bound(depth))) {
      LinearProgram solved = lp;
      solved.remove_duplicate_rows();
      const LPSolution sol = solve_exact(solved);
      ++out_.lps;
      if (sol.status != LPStatus::Optimal) {
        throw Error(ErrorCode::Internal, "exponent LP is " + std::string(to_string(sol.status)));
      }
      if (!leaf && sol.optimum > out_.best) {
        covered_ += counter_.count(mask);
        return;
      }
      if (leaf) {
        ++covered_;
        if (!out_.has_best || sol.optimum < out_.best) {
          out_.best = sol.optimum;
          out_.has_best = true;
          out_.argmins.clear();
        }
        if (sol.optimum == out_.best) out_.argmins.push_back(order_);
        return;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (((mask >> i) & 1u) == 0 && (poset_.prerequisites(i) & ~mask) == 0) {
        descend(depth + 1, mask, i);
      }
    }
  }

  // Bound only where the remaining subtree is large enough to be worth an LP.
  bool should_bound(std::size_t depth) const { return depth + 3 < poset_.size(); }

  const SchedulePoset& poset_;
  const std::vector<LevelTerms>& terms_;
  const OptimizeConfig& config_;
  ExponentLPBuilder builder_;
  CompletionCounter& counter_;
  std::vector<std::uint8_t> order_;
  std::vector<LinearProgram> lp_stack_;
  std::vector<LinearExpr> cum_stack_;
  std::uint64_t covered_ = 0;
  SearchOutcome out_;
};

// Level terms per poset element; they do not depend on the position.
std::vector<LevelTerms> terms_by_element(const PatternHypergraph& pattern,
                                         const SchedulePoset& poset) {
  std::vector<std::uint8_t> any_order;
  for_each_linear_extension(poset, [&](std::span<const std::uint8_t> order) {
    any_order.assign(order.begin(), order.end());
    return false;
  });
  const auto levels = level_terms(pattern, poset.to_schedule(any_order));
  std::vector<LevelTerms> out(poset.size());
  for (std::size_t t = 0; t < any_order.size(); ++t) out[any_order[t]] = levels[t];
  return out;
}

}  // namespace

OptimizeResult optimize_over_schedules(const PatternHypergraph& pattern,
                                       const OptimizeConfig& config) {
  const SchedulePoset poset(pattern);
  OptimizeResult result;
  if (config.mode == OptimizeConfig::Mode::Heuristic) {
    EnumerationConfig enum_config;
    enum_config.mode = EnumerationConfig::Mode::Heuristic;
    enum_config.budget = config.budget;
    enum_config.seed = config.seed;
    bool has_best = false;
    for (const LoadingSchedule& s : heuristic_schedules(pattern, enum_config, config.injected)) {
      const LPSolution sol = solve_exact(build_exponent_lp(
          pattern, s, ExponentLPOptions{std::nullopt, config.relax_vertex}));
      ++result.lps_solved;
      ++result.schedules_considered;
      if (sol.status != LPStatus::Optimal) {
        throw Error(ErrorCode::Internal, "exponent LP is " + std::string(to_string(sol.status)));
      }
      if (!has_best || sol.optimum < result.best) {
        result.best = sol.optimum;
        result.argmins.clear();
        has_best = true;
      }
      if (sol.optimum == result.best) result.argmins.push_back(s);
    }
  } else {
    const auto terms = terms_by_element(pattern, poset);
    CompletionCounter counter(poset);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (poset.prerequisites(i) == 0) roots.push_back(i);
    }
    std::vector<SearchOutcome> outcomes(roots.size());
    std::vector<std::uint64_t> covered(roots.size(), 0);
    std::size_t next = 0;
    std::mutex next_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
      while (true) {
        std::size_t k;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= roots.size() || failure) return;
          k = next++;
        }
        try {
          ExhaustiveSearch search(pattern, poset, terms, config, counter);
          outcomes[k] = search.run(roots[k], covered[k]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(next_mutex);
          failure = std::current_exception();
        }
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, roots.size()));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    bool has_best = false;
    for (const auto& o : outcomes) {
      if (o.has_best && (!has_best || o.best < result.best)) {
        result.best = o.best;
        has_best = true;
      }
    }
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      result.lps_solved += outcomes[k].lps;
      result.schedules_considered += covered[k];
      if (outcomes[k].has_best && outcomes[k].best == result.best) {
        for (const auto& order : outcomes[k].argmins) result.argmins.push_back(poset.to_schedule(order));
      }
    }
  }
  if (!result.argmins.empty()) {
    result.best_detail = solve_schedule(pattern, result.argmins.front(), config.margin,
                                        config.relax_vertex);
  }
  return result;
}

}  // namespace hyperwalk
