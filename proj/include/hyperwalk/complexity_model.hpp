#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rational.hpp"

namespace hyperwalk {

/// Column layout shared by parameter vectors and exponent LPs:
/// x_1..x_kappa, then y for every pair of Sigma_2, then z for every triple
/// of Sigma_3 (both in the pattern's sorted order).
class VariableIndex {
 public:
  explicit VariableIndex(const PatternHypergraph& pattern);

  std::size_t x(int vertex) const;
  std::size_t y(const Pair& pair) const;
  std::size_t z(const Triple& triple) const;
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t column) const { return names_[column]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  const PatternHypergraph* pattern_;
  std::vector<std::string> names_;
};

/// constant + sum_k coeff[k] * variable_k over a VariableIndex layout.
struct LinearExpr {
  std::vector<Rational> coeff;
  Rational constant;

  explicit LinearExpr(std::size_t width = 0) : coeff(width) {}

  LinearExpr& add(std::size_t column, const Rational& value) {
    coeff[column] += value;
    return *this;
  }
  LinearExpr& operator+=(const LinearExpr& rhs);
  LinearExpr& operator-=(const LinearExpr& rhs);
  LinearExpr& scale(const Rational& factor);

  Rational evaluate(std::span<const Rational> values) const;
  std::string str(const VariableIndex& index) const;
};

/// Exponents of n for r_i = n^x_i, f_ij = n^y_ij and e_ijk = n^z_ijk.
struct ParameterExponents {
  std::map<int, Rational> x;
  std::map<Pair, Rational> y;
  std::map<Triple, Rational> z;

  /// Throws KeyMismatch unless the keys are exactly Sigma_1, Sigma_2, Sigma_3.
  void check_keys(const PatternHypergraph& pattern) const;
  std::vector<Rational> to_vector(const VariableIndex& index,
                                  const PatternHypergraph& pattern) const;
  static ParameterExponents from_vector(const PatternHypergraph& pattern,
                                        std::span<const Rational> values);
};

/// Exponent of M_ijk up to its constant factor: y_ij + y_ik + y_jk - x_i - x_j - x_k.
LinearExpr triple_capacity(const VariableIndex& index, const Triple& triple);

/// One nested-walk level in exponent form. The level's term in the cost is
///   sum_{r <= t} epsilon_r + delta_t + max_b update_branches[b].
struct LevelTerms {
  ScheduleElement element;
  LinearExpr epsilon;  // exponent of 1/sqrt(eps_t)
  LinearExpr delta;    // exponent of 1/sqrt(delta_t)
  std::vector<LinearExpr> update_branches;  // branch 0 is the constant 0
  std::vector<std::string> branch_labels;
};

/// Throws InvalidSchedule if `schedule` is not valid for `pattern`.
std::vector<LevelTerms> level_terms(const PatternHypergraph& pattern,
                                    const LoadingSchedule& schedule);

/// One admissibility requirement written as `slack >= 0` (non-strict) or
/// `slack > 0` (strict).
struct AdmissibilityConstraint {
  std::string id;
  LinearExpr slack;
  bool strict = false;
  /// Strict in the literal reading but checked non-strictly because the
  /// caller relaxed the n/r_i condition.
  bool relaxed = false;
};

std::vector<AdmissibilityConstraint> admissibility_constraints(const PatternHypergraph& pattern,
                                                               bool relax_vertex);

struct AdmissibilityReport {
  struct Condition {
    std::string id;
    Rational slack;
    bool strict = false;
    bool relaxed = false;
    bool satisfied = false;
  };

  bool strict_ok = false;
  std::vector<Condition> conditions;
  bool relaxed_vertex = true;

  /// Conditions that fail (negative slack, or zero slack on a strict one).
  std::vector<Condition> failures() const;
};

/// Exact-slack check of every admissibility condition. Non-strict
/// conditions need slack >= 0, strict ones slack > 0; with relax_vertex the
/// n/r_i conditions are only required to be non-strict.
AdmissibilityReport check_admissibility(const PatternHypergraph& pattern,
                                        const ParameterExponents& params,
                                        bool relax_vertex = true);

struct CostBreakdown {
  struct Level {
    std::size_t t = 0;  // 1-based level
    ScheduleElement element;
    Rational epsilon;
    Rational cumulative_epsilon;
    Rational delta;
    Rational update;
    Rational total;
  };

  Rational setup_exponent;
  std::vector<Level> levels;
  Rational overall;
};

/// Query-complexity exponent of the nested walk for a fixed schedule and
/// parameter assignment; constants and polylog factors are dropped.
CostBreakdown cost_exponent(const PatternHypergraph& pattern, const LoadingSchedule& schedule,
                            const ParameterExponents& params);

}  // namespace hyperwalk
