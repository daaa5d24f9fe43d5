#include <gtest/gtest.h>

#include "hyperwalk/complexity_model.hpp"
#include "hyperwalk/error.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/lp_solver.hpp"
#include "hyperwalk/schedule_enum.hpp"

using namespace hyperwalk;

namespace {

const std::string kData = HYPERWALK_DATA_DIR;

Rational q(const char* text) { return Rational::parse(text); }

struct K4Fixture : ::testing::Test {
  PatternHypergraph pattern = io::parse_pattern(kData + "/k4.json");
  LoadingSchedule schedule = io::parse_schedule(kData + "/schedules/k4_reference.json");
  ParameterExponents params = io::parse_params(kData + "/params/k4_reference.json");
};

}  // namespace

TEST(Rational, ArithmeticAndParsing) {
  EXPECT_EQ(q("6/8"), Rational(3, 4));
  EXPECT_EQ(q("-2/-4"), Rational(1, 2));
  EXPECT_EQ(q("1/3") + q("1/6"), q("1/2"));
  EXPECT_EQ((q("241/128") - q("1/128")).str(), "15/8");
  EXPECT_LT(q("169/80"), q("17/8"));
  EXPECT_THROW(q("1/0"), Error);
  EXPECT_THROW(q("abc"), Error);
}

TEST_F(K4Fixture, ReferenceScheduleCostIsExact) {
  const CostBreakdown cost = cost_exponent(pattern, schedule, params);
  EXPECT_EQ(cost.overall, q("241/128"));
  EXPECT_EQ(cost.setup_exponent, q("241/128"));
  EXPECT_EQ(cost.levels.size(), 14u);
  for (const auto& level : cost.levels) EXPECT_LE(level.total, cost.overall);
}

TEST_F(K4Fixture, TightnessIdentity) {
  const Rational lhs = params.y.at(Pair{1, 2}) + params.y.at(Pair{1, 3}) +
                       params.y.at(Pair{2, 3}) - params.x.at(1) - params.x.at(2) - params.x.at(3);
  EXPECT_EQ(lhs, q("241/128"));
  EXPECT_EQ(lhs, params.z.at(Triple{1, 2, 3}));
}

TEST_F(K4Fixture, StrictAdmissibility) {
  EXPECT_TRUE(check_admissibility(pattern, params, false).strict_ok);
  EXPECT_TRUE(check_admissibility(pattern, params, true).strict_ok);
}

TEST_F(K4Fixture, KeyMismatchAndInvalidSchedule) {
  ParameterExponents bad = params;
  bad.x.erase(4);
  EXPECT_THROW(cost_exponent(pattern, schedule, bad), KeyMismatch);
  LoadingSchedule broken = schedule;
  std::swap(broken[0], broken[4]);
  EXPECT_THROW(cost_exponent(pattern, broken, params), InvalidSchedule);
}

TEST_F(K4Fixture, ReferenceScheduleLP) {
  const auto lp = build_exponent_lp(pattern, schedule);
  const auto sol = solve_exact(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, q("241/128"));
  EXPECT_TRUE(verify_feasible(lp, sol.witness));
  EXPECT_TRUE(verify_optimality_certificate(lp, sol));

  // The witness, read back as parameters, costs exactly the optimum.
  const VariableIndex index(pattern);
  const auto witness = ParameterExponents::from_vector(
      pattern, std::span<const Rational>(sol.witness.data(), index.size()));
  EXPECT_EQ(cost_exponent(pattern, schedule, witness).overall, sol.optimum);
  // The reference point is feasible for the same LP, so it cannot beat it.
  EXPECT_GE(cost_exponent(pattern, schedule, params).overall, sol.optimum);
}

TEST(SimplexSmall, KnownOptimaAndStatuses) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6  ->  x = 8/5, y = 6/5.
  LinearProgram lp;
  lp.add_variable("x");
  lp.add_variable("y");
  lp.objective = {Rational(-1), Rational(-1)};
  lp.add_row({Rational(1), Rational(2)}, Relation::LessEqual, Rational(4), "a");
  lp.add_row({Rational(3), Rational(1)}, Relation::LessEqual, Rational(6), "b");
  auto sol = solve_exact(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, q("-14/5"));
  EXPECT_EQ(sol.witness[0], q("8/5"));
  EXPECT_EQ(sol.witness[1], q("6/5"));
  EXPECT_TRUE(verify_optimality_certificate(lp, sol));

  // Negative right-hand sides and an equality: x >= 2, x + y = 5, min y.
  LinearProgram lp2;
  lp2.add_variable("x");
  lp2.add_variable("y");
  lp2.objective = {Rational(0), Rational(1)};
  lp2.add_row({Rational(-1), Rational(0)}, Relation::LessEqual, Rational(-2), "x>=2");
  lp2.add_row({Rational(1), Rational(1)}, Relation::Equal, Rational(5), "sum");
  lp2.add_row({Rational(1), Rational(0)}, Relation::LessEqual, Rational(7), "x<=7");
  sol = solve_exact(lp2);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, Rational(0));
  EXPECT_TRUE(verify_optimality_certificate(lp2, sol));

  LinearProgram infeasible;
  infeasible.add_variable("x");
  infeasible.objective = {Rational(1)};
  infeasible.add_row({Rational(1)}, Relation::LessEqual, Rational(-1), "x<=-1");
  EXPECT_EQ(solve_exact(infeasible).status, LPStatus::Infeasible);

  LinearProgram unbounded;
  unbounded.add_variable("x");
  unbounded.objective = {Rational(-1)};
  unbounded.add_row({Rational(-1)}, Relation::LessEqual, Rational(0), "x>=0");
  EXPECT_EQ(solve_exact(unbounded).status, LPStatus::Unbounded);
}

TEST(SimplexSmall, DuplicateRowsRemoved) {
  LinearProgram lp;
  lp.add_variable("x");
  lp.add_row({Rational(1)}, Relation::LessEqual, Rational(1), "first");
  lp.add_row({Rational(1)}, Relation::LessEqual, Rational(1), "second");
  lp.remove_duplicate_rows();
  ASSERT_EQ(lp.rows.size(), 1u);
  EXPECT_EQ(lp.rows[0].label, "first");
}

TEST(SingleTriple, LPOptimumIsALowerBoundOnTheGrid) {
  const PatternHypergraph h(3, {{1, 2, 3}});
  OptimizeConfig config;
  const OptimizeResult res = optimize_over_schedules(h, config);
  EXPECT_EQ(res.schedules_considered, 48u);
  ASSERT_FALSE(res.argmins.empty());
  const LoadingSchedule& s = res.argmins.front();

  // Symmetric grid x_i = a, y_ij = b, z = c at step 1/32 over admissible
  // points: no grid point may beat the LP, and the best grid point is the
  // optimum of the schedule LP restricted to that grid.
  Rational grid_best(1000);
  const Rational step(1, 32);
  for (int a = 0; a <= 32; ++a) {
    for (int b = 0; b <= 64; ++b) {
      for (int c = 0; c <= 96; ++c) {
        ParameterExponents p;
        for (int v = 1; v <= 3; ++v) p.x[v] = step * Rational(a);
        for (const Pair& e : h.pairs()) p.y[e] = step * Rational(b);
        p.z[Triple{1, 2, 3}] = step * Rational(c);
        if (!check_admissibility(h, p, true).strict_ok) continue;
        const Rational cost = cost_exponent(h, s, p).overall;
        if (cost < grid_best) grid_best = cost;
      }
    }
  }
  EXPECT_GE(grid_best, res.best);
  EXPECT_LE(grid_best - res.best, Rational(1, 8));
}

TEST(SingleTriple, JobsDoNotChangeResult) {
  const PatternHypergraph h(3, {{1, 2, 3}});
  OptimizeConfig one;
  OptimizeConfig three;
  three.jobs = 3;
  const auto a = optimize_over_schedules(h, one);
  const auto b = optimize_over_schedules(h, three);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.argmins, b.argmins);
  EXPECT_EQ(a.lps_solved, b.lps_solved);
  OptimizeConfig unpruned;
  unpruned.prune = false;
  const auto c = optimize_over_schedules(h, unpruned);
  EXPECT_EQ(c.best, a.best);
  EXPECT_EQ(c.argmins, a.argmins);
  EXPECT_EQ(c.lps_solved, 48u);
}

TEST(TwoTriples, DisjointOptimumEqualsSingle) {
  const PatternHypergraph one(3, {{1, 2, 3}});
  const PatternHypergraph two(6, {{1, 2, 3}, {4, 5, 6}});
  OptimizeConfig config;
  config.mode = OptimizeConfig::Mode::Heuristic;
  config.budget = 30;
  const auto single = optimize_over_schedules(one, OptimizeConfig{});
  const auto pair = optimize_over_schedules(two, config);
  // Loading a second disjoint copy can only add cost.
  EXPECT_GE(pair.best, single.best);
}
