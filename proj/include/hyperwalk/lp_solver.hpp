#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperwalk/complexity_model.hpp"
#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rational.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

enum class Relation { LessEqual, Equal };

/// minimize objective . v  subject to  rows, v >= 0.
/// Exponent LPs use a single epigraph variable T as the objective.
struct LinearProgram {
  struct Row {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
    std::string label;
  };

  std::vector<std::string> variables;
  std::vector<Row> rows;
  std::vector<Rational> objective;

  std::size_t add_variable(std::string name);
  /// Appends a row; coeffs is zero-padded to the variable count.
  /// Throws ValidationError if it references undeclared variables.
  std::size_t add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs,
                      std::string label);
  std::optional<std::size_t> variable(const std::string& name) const;
  /// Drops exact duplicate rows (same coefficients, relation and rhs),
  /// keeping the first label.
  void remove_duplicate_rows();
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational optimum;
  std::vector<Rational> witness;
  std::vector<std::size_t> tight_rows;
  /// Row multipliers proving optimality: nonnegative for <= rows, free for
  /// equalities, with objective + A^T duals >= 0 and
  /// objective . witness = -(rhs . duals).
  std::vector<Rational> duals;
  std::uint64_t pivots = 0;
  bool used_big_rationals = false;
};

/// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
/// Runs on overflow-checked 64-bit rationals and transparently re-solves
/// with GMP rationals on overflow. Deterministic.
LPSolution solve_exact(const LinearProgram& lp);

/// Substitutes the witness into every row exactly.
bool verify_feasible(const LinearProgram& lp, const std::vector<Rational>& witness);
/// Checks the dual certificate exactly (see LPSolution::duals).
bool verify_optimality_certificate(const LinearProgram& lp, const LPSolution& solution);

struct ExponentLPOptions {
  /// When set, strict admissibility rows are added as slack >= margin.
  std::optional<Rational> margin;
  /// With a margin, skip the n/r_i rows (they stay non-strict).
  bool relax_vertex = true;
};

/// Epigraph LP of the cost exponent for a fixed schedule. Variables are the
/// VariableIndex columns followed by T; the objective is T.
LinearProgram build_exponent_lp(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                                const ExponentLPOptions& options = {});

struct ScheduleLPResult {
  LoadingSchedule schedule;
  LPSolution solution;
  /// Strict admissibility at the witness (vertex rows relaxed per options).
  bool strict_ok = false;
  /// Re-solve with the configured margin, present when a strict row was tight.
  std::optional<LPSolution> margin_solution;
  Rational margin;
};

/// Solves the exponent LP for one schedule and applies the strict-row
/// post-check: if a strict admissibility condition is tight at the optimum,
/// re-solves with `margin` and reports both optima.
ScheduleLPResult solve_schedule(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                                const Rational& margin = Rational(1, 1024),
                                bool relax_vertex = true);

struct OptimizeConfig {
  enum class Mode { Exhaustive, Heuristic };

  Mode mode = Mode::Exhaustive;
  std::uint64_t budget = 1000;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  Rational margin = Rational(1, 1024);
  bool relax_vertex = true;
  /// Heuristic mode: schedules evaluated before the random stream.
  std::vector<LoadingSchedule> injected;
  /// Exhaustive mode: skip subtrees whose prefix LP already exceeds the
  /// incumbent. Argmins are preserved because pruning is strict.
  bool prune = true;
};

struct OptimizeResult {
  Rational best;
  /// Every visited schedule attaining `best`, in enumeration order.
  std::vector<LoadingSchedule> argmins;
  /// Full LP result (with strict post-check) for the first argmin.
  ScheduleLPResult best_detail;
  std::uint64_t schedules_considered = 0;
  std::uint64_t lps_solved = 0;
};

/// Minimum of the per-schedule LP optimum over the visited schedules.
/// Results are independent of config.jobs; ties keep enumeration order.
OptimizeResult optimize_over_schedules(const PatternHypergraph& pattern,
                                       const OptimizeConfig& config);

}  // namespace hyperwalk
