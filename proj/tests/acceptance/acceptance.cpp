// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed below.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperwalk/assoc.hpp"
#include "hyperwalk/complexity_model.hpp"
#include "hyperwalk/error.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/lp_solver.hpp"
#include "hyperwalk/oracle.hpp"
#include "hyperwalk/schedule_enum.hpp"
#include "hyperwalk/stats.hpp"
#include "hyperwalk/walk_sim.hpp"

using namespace hyperwalk;

namespace {

const std::string kData = HYPERWALK_DATA_DIR;

constexpr double kCountBudgetSec = 60.0;
constexpr double kTripleBudgetSec = 1.0;
constexpr double kPerLpBudgetMs = 20.0;
constexpr double kExhaustiveBudgetSec = 4 * 3600.0;
constexpr double kTailBudgetSec = 300.0;
constexpr std::uint32_t kTailNmax = 60;
constexpr std::uint64_t kClaimTrials = 10000;
constexpr double kLemma3MinFrequency = 0.99;
constexpr std::uint64_t kLemma3Trials = 10000;
constexpr double kSwapMaxFrequency = 0.01;
constexpr std::uint64_t kSwapTrials = 1000;
constexpr std::uint64_t kRegularityTrials = 10000;
constexpr std::uint64_t kSeed = kDefaultSeed;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << "\n"
            << std::flush;
  if (!pass) ++failures;
}

void info(int id, const std::string& detail) {
  std::cout << "  info " << id << ": " << detail << "\n" << std::flush;
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(id, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

PatternHypergraph k4() { return io::parse_pattern(kData + "/k4.json"); }

void criterion1() {
  const auto h = k4();
  const auto t0 = Clock::now();
  const std::uint64_t count = count_complete_schedules(h);
  const double secs = seconds_since(t0);
  verdict(1, count == 1680384 && secs < kCountBudgetSec,
          "count=" + std::to_string(count) + " expected=1680384 secs=" + fmt(secs));
}

void criterion2() {
  const auto h = io::parse_pattern(kData + "/triple.json");
  const auto t0 = Clock::now();
  std::uint64_t streamed = 0;
  enumerate_complete_schedules(h, [&](const LoadingSchedule&) {
    ++streamed;
    return true;
  });
  const double secs = seconds_since(t0);
  LoadingSchedule all;
  for (const char* t : {"v1", "v2", "v3", "p12", "p13", "p23", "t123"}) {
    all.push_back(ScheduleElement::parse(t));
  }
  std::sort(all.begin(), all.end());
  std::uint64_t brute = 0;
  do {
    if (is_valid_schedule(h, all)) ++brute;
  } while (std::next_permutation(all.begin(), all.end()));
  verdict(2, streamed == 48 && brute == 48 && secs < kTripleBudgetSec,
          "enumerated=" + std::to_string(streamed) + " brute_force=" + std::to_string(brute) +
              " secs=" + fmt(secs));
}

void criterion3() {
  const auto h = k4();
  const auto s = io::parse_schedule(kData + "/schedules/k4_reference.json");
  const auto p = io::parse_params(kData + "/params/k4_reference.json");
  const Rational got = cost_exponent(h, s, p).overall;
  verdict(3, got == Rational(241, 128), "cost_exponent=" + got.str() + " expected=241/128");
}

void criterion4() {
  const auto h = k4();
  const auto reference = io::parse_schedule(kData + "/schedules/k4_reference.json");
  const auto lp = build_exponent_lp(h, reference);
  const auto sol = solve_exact(lp);
  const bool lp_ok = sol.status == LPStatus::Optimal && sol.optimum == Rational(241, 128) &&
                     verify_optimality_certificate(lp, sol);

  // Mean per-LP time over the first schedules of the enumeration.
  std::uint64_t timed = 0;
  const auto t_lp = Clock::now();
  enumerate_complete_schedules(h, [&](const LoadingSchedule& s) {
    solve_exact(build_exponent_lp(h, s));
    return ++timed < 500;
  });
  const double per_lp_ms = 1000.0 * seconds_since(t_lp) / static_cast<double>(timed);

  OptimizeConfig config;
  config.mode = OptimizeConfig::Mode::Exhaustive;
  const auto t0 = Clock::now();
  const OptimizeResult res = optimize_over_schedules(h, config);
  const double secs = seconds_since(t0);
  const bool reference_in =
      std::find(res.argmins.begin(), res.argmins.end(), reference) != res.argmins.end();
  const bool pass = lp_ok && res.best == Rational(241, 128) && reference_in &&
                    res.schedules_considered == 1680384 && per_lp_ms < kPerLpBudgetMs &&
                    secs < kExhaustiveBudgetSec;
  verdict(4, pass,
          "reference_lp=" + sol.optimum.str() + " certificate=" +
              (verify_optimality_certificate(lp, sol) ? "ok" : "bad") +
              " exhaustive_min=" + res.best.str() + " reference_in_argmins=" +
              (reference_in ? "yes" : "no") + " argmins=" + std::to_string(res.argmins.size()) +
              " covered=" + std::to_string(res.schedules_considered) +
              " lps=" + std::to_string(res.lps_solved) + " per_lp_ms=" + fmt(per_lp_ms) +
              " secs=" + fmt(secs));
}

void criterion5() {
  const auto h = io::parse_pattern(kData + "/h7_assoc.json");
  const auto s = io::parse_schedule(kData + "/schedules/h7_reference.json");
  const auto p = io::parse_params(kData + "/params/h7_reference.json");
  const CostBreakdown cost = cost_exponent(h, s, p);
  const ScheduleLPResult lp = solve_schedule(h, s);
  const Rational target(169, 80);
  const bool pass = cost.overall == target && lp.solution.status == LPStatus::Optimal &&
                    lp.solution.optimum <= target;
  verdict(5, pass,
          "cost_exponent=" + cost.overall.str() + " fixed_schedule_lp=" +
              lp.solution.optimum.str() + " expected: cost=169/80, lp<=169/80");
  if (!pass) {
    std::string worst;
    for (const auto& level : cost.levels) {
      if (level.total == cost.overall) worst += " " + level.element.str();
    }
    info(5, "setup=" + cost.setup_exponent.str() + " levels attaining the maximum:" + worst);
  }
}

void criterion6() {
  const auto h4 = k4();
  const auto p4 = io::parse_params(kData + "/params/k4_reference.json");
  const auto h7 = io::parse_pattern(kData + "/h7_assoc.json");
  const auto p7 = io::parse_params(kData + "/params/h7_reference.json");
  const auto k4_strict = check_admissibility(h4, p4, false);
  const auto h7_relaxed = check_admissibility(h7, p7, true);
  const auto h7_strict = check_admissibility(h7, p7, false);
  bool only_vertex = !h7_strict.failures().empty();
  std::string ids;
  for (const auto& f : h7_strict.failures()) {
    ids += " " + f.id;
    if (f.id.rfind("n/r", 0) != 0 || f.slack != Rational(0)) only_vertex = false;
  }
  verdict(6, k4_strict.strict_ok && h7_relaxed.strict_ok && !h7_strict.strict_ok && only_vertex,
          std::string("k4_strict=") + (k4_strict.strict_ok ? "ok" : "fail") +
              " h7_relaxed=" + (h7_relaxed.strict_ok ? "ok" : "fail") +
              " h7_strict_non_strict_on:" + ids);
}

void criterion7() {
  const auto p = io::parse_params(kData + "/params/k4_reference.json");
  const Rational lhs = p.y.at(Pair{1, 2}) + p.y.at(Pair{1, 3}) + p.y.at(Pair{2, 3}) -
                       (p.x.at(1) + p.x.at(2) + p.x.at(3));
  const Rational z = p.z.at(Triple{1, 2, 3});
  verdict(7, lhs == Rational(241, 128) && lhs == z,
          "y12+y13+y23-(x1+x2+x3)=" + lhs.str() + " z123=" + z.str());
}

void criterion8() {
  const auto t0 = Clock::now();
  const auto report = verify_tail_bounds(TailGrid::standard(kTailNmax));
  const double secs = seconds_since(t0);
  verdict(8, report.pass() && secs < kTailBudgetSec,
          "violations=" + std::to_string(report.violations.size()) +
              " checked=" + std::to_string(report.checked[0]) + "/" +
              std::to_string(report.checked[1]) + "/" + std::to_string(report.checked[2]) +
              " secs=" + fmt(secs));
}

void criterion9() {
  const auto audit = audit_claim_lambda(4, kClaimTrials, kSeed);
  verdict(9, audit.checked == kClaimTrials && audit.failures == 0,
          "instances=" + std::to_string(audit.checked) +
              " failures=" + std::to_string(audit.failures));
}

void criterion10() {
  const TripleUniverse u(8);
  Rng rng(kSeed);
  const auto [g, gp] = random_gamma_pair(u, 100, 20, rng);
  const auto r = mc_lemma3(g, gp, 120, 30, kLemma3Trials, kSeed, u, kLemma3MinFrequency);
  verdict(10, r.frequency >= kLemma3MinFrequency,
          "frequency=" + fmt(r.frequency) + " threshold=" + fmt(r.threshold) +
              " max_observed=" + std::to_string(r.max_observed) + " trials=" +
              std::to_string(r.trials));
}

void criterion11() {
  std::string detail;
  bool pass = true;
  try {
    const auto r = mc_regularity(16, 16, 16, 1024, 1024, kRegularityTrials, kSeed);
    pass = pass && r.pass;
    detail += "regularity wilson_low=" + fmt(r.wilson_low) + " bound=" + fmt(r.failure_bound);
  } catch (const DomainError& e) {
    pass = false;
    detail += std::string("regularity: ") + e.what();
  }
  const SwapParams sp{16, 16, 16, 1024, 1024, 1024};
  for (int which = 0; which < 2; ++which) {
    try {
      const auto r = which == 0 ? mc_vertex_swap(sp, kSwapTrials, kSeed, kSwapMaxFrequency)
                                : mc_pair_swap(sp, kSwapTrials, kSeed, kSwapMaxFrequency);
      pass = pass && r.frequency <= kSwapMaxFrequency;
      detail += std::string(which == 0 ? "; vertex_swap" : "; pair_swap") +
                " exceedance=" + fmt(r.frequency);
    } catch (const DomainError& e) {
      pass = false;
      detail += std::string(which == 0 ? "; vertex_swap: " : "; pair_swap: ") + e.what();
    }
  }
  verdict(11, pass, detail);
  if (pass) return;

  // The stated sizes exceed |V_i x V_j| = 256; report the same checks at a
  // density-matched feasible size for reference.
  const int r = 64;
  const std::int64_t f = 3584;
  const auto reg = mc_regularity(r, r, r, f, f, kRegularityTrials, kSeed);
  info(11, "r=(64,64,64) f=3584: regularity failures=" + std::to_string(reg.failures) + "/" +
               std::to_string(reg.trials) + " wilson_low=" + fmt(reg.wilson_low) +
               " bound=" + fmt(reg.failure_bound) + (reg.vacuous ? " (vacuous)" : "") +
               (reg.pass ? " ok" : " exceeded"));
  const SwapParams feasible{r, r, r, f, f, f};
  const auto vs = mc_vertex_swap(feasible, kSwapTrials, kSeed, kSwapMaxFrequency);
  const auto ps = mc_pair_swap(feasible, kSwapTrials, kSeed, kSwapMaxFrequency);
  info(11, "r=(64,64,64) f=3584: vertex_swap exceedance=" + fmt(vs.frequency) +
               " pair_swap exceedance=" + fmt(ps.frequency) + " threshold(vertex)=" +
               fmt(vs.threshold) + " threshold(pair)=" + fmt(ps.threshold));
}

std::vector<std::array<int, 4>> klein_table() {
  // Z2 x Z2 on 1..4 via xor of (value - 1).
  std::vector<std::array<int, 4>> t(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a ^ b) + 1;
  return t;
}

TernaryOperator conjugate(const TernaryOperator& f, const std::vector<int>& perm) {
  // g(a,b,c) = perm(f(perm^-1 a, perm^-1 b, perm^-1 c)); associativity is preserved.
  const int n = f.n();
  std::vector<int> inv(n + 1);
  for (int i = 1; i <= n; ++i) inv[perm[i - 1]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        table[((a - 1) * n + (b - 1)) * n + (c - 1)] = perm[f(inv[a], inv[b], inv[c]) - 1];
  return TernaryOperator(n, table);
}

void criterion12() {
  const auto h = k4();
  int recovered = 0;
  int cross_ok = 0;
  std::uint64_t total_queries = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto planted = plant_pattern(15, h, 0.1, seed);
    const auto& g = planted.instance;
    QueryCounter counter;
    const auto found = find_subhypergraph(g, h, counter);
    total_queries += counter.total();
    if (found && verify_embedding(g, h, *found)) ++recovered;

    std::set<std::set<int>> by_subsets;
    for (int a = 1; a <= 15; ++a)
      for (int b = a + 1; b <= 15; ++b)
        for (int c = b + 1; c <= 15; ++c)
          for (int d = c + 1; d <= 15; ++d)
            if (g.contains({a, b, c}) && g.contains({a, b, d}) && g.contains({a, c, d}) &&
                g.contains({b, c, d}))
              by_subsets.insert({a, b, c, d});
    std::set<std::set<int>> by_search;
    QueryCounter all;
    for_each_embedding(g, h, all, [&](const std::vector<int>& e) {
      by_search.insert(std::set<int>(e.begin(), e.end()));
      return true;
    });
    const std::set<int> planted_set(planted.embedding.begin(), planted.embedding.end());
    if (by_subsets == by_search && by_subsets.count(planted_set) &&
        (!found || by_subsets.count(std::set<int>(found->begin(), found->end()))))
      ++cross_ok;
  }

  // Equivalence on a mixed family at n = 4.
  Rng rng(kSeed);
  int family = 0;
  int agree = 0;
  int associative = 0;
  const auto klein = klein_table();
  std::vector<int> klein_op(64);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        klein_op[((a - 1) * 4 + (b - 1)) * 4 + (c - 1)] = klein[klein[a - 1][b - 1] - 1][c - 1];
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> perm{1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    TernaryOperator f = TernaryOperator::random(4, rng);
    switch (i % 4) {
      case 1: f = conjugate(TernaryOperator::modular_sum(4), perm); break;
      case 2: f = conjugate(TernaryOperator(4, klein_op), perm); break;
      case 3: {
        f = conjugate(TernaryOperator::modular_sum(4), perm);
        const int a = 1 + static_cast<int>(uniform_below(rng, 4));
        const int b = 1 + static_cast<int>(uniform_below(rng, 4));
        const int c = 1 + static_cast<int>(uniform_below(rng, 4));
        f.set(a, b, c, 1 + static_cast<int>(uniform_below(rng, 4)));
        break;
      }
      default: break;
    }
    ++family;
    const bool assoc = !is_associative(f).has_value();
    associative += assoc;
    const auto c1 = find_certificate(f, AssocCase::I);
    const auto c2 = find_certificate(f, AssocCase::II);
    const bool none = !c1 && !c2;
    const bool valid = (!c1 || verify_certificate(f, *c1)) && (!c2 || verify_certificate(f, *c2));
    if (assoc == none && valid) ++agree;
  }

  // Reduction versus direct certificate search for n <= 6.
  int reductions = 0;
  int reductions_ok = 0;
  for (int n = 2; n <= 6; ++n) {
    const int reps = n <= 4 ? 20 : 4;
    for (int rep = 0; rep < reps; ++rep) {
      TernaryOperator f = rep % 2 == 0 ? TernaryOperator::random(n, rng)
                                       : TernaryOperator::modular_sum(n);
      if (rep % 4 == 3) f.set(1, 1, 1, n);
      for (AssocCase which : {AssocCase::I, AssocCase::II}) {
        ++reductions;
        const auto direct = find_certificate(f, which);
        QueryCounter counter;
        const auto via = find_occurrence(build_reduction(f, which), counter);
        const bool ok = direct.has_value() == via.has_value() &&
                        (!via || (verify_certificate(f, *via) && via->a == direct->a));
        reductions_ok += ok;
      }
    }
  }

  verdict(12,
          recovered == 100 && cross_ok == 100 && agree == family &&
              reductions_ok == reductions,
          "planted_recovered=" + std::to_string(recovered) + "/100 subset_crosscheck=" +
              std::to_string(cross_ok) + "/100 assoc_equivalence=" + std::to_string(agree) +
              "/" + std::to_string(family) + " (associative=" + std::to_string(associative) +
              ") reduction_agreement=" + std::to_string(reductions_ok) + "/" +
              std::to_string(reductions) +
              " mean_queries=" + std::to_string(total_queries / 100));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::function<void()>> criteria{
      criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11, criterion12};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    guarded(id, criteria[i]);
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
