#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hyperwalk/error.hpp"
#include "hyperwalk/pattern.hpp"
#include "hyperwalk/schedule_enum.hpp"

using namespace hyperwalk;

namespace {

PatternHypergraph single_triple() { return PatternHypergraph(3, {{1, 2, 3}}); }

LoadingSchedule parse_all(std::initializer_list<const char*> tokens) {
  LoadingSchedule s;
  for (const char* t : tokens) s.push_back(ScheduleElement::parse(t));
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(ScheduleElement, ParsesCompactAndDashedForms) {
  EXPECT_EQ(ScheduleElement::parse("v3"), ScheduleElement::vertex(3));
  EXPECT_EQ(ScheduleElement::parse("p21"), ScheduleElement::pair(1, 2));
  EXPECT_EQ(ScheduleElement::parse("t1-2-10").as_triple(), (Triple{1, 2, 10}));
  EXPECT_EQ(ScheduleElement::parse("t312").str(), "t123");
  EXPECT_THROW(ScheduleElement::parse("q12"), Error);
  EXPECT_THROW(ScheduleElement::parse("p11"), Error);
}

TEST(Pattern, RejectsMalformedTriples) {
  EXPECT_THROW(PatternHypergraph(3, {{1, 1, 2}}), ValidationError);
  EXPECT_THROW(PatternHypergraph(3, {{1, 2, 4}}), ValidationError);
  EXPECT_THROW(PatternHypergraph(4, {{1, 2, 3}, {3, 2, 1}}), ValidationError);
}

TEST(Pattern, DerivesPairs) {
  const PatternHypergraph k4(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  EXPECT_EQ(k4.pairs().size(), 6u);
  EXPECT_EQ(derive_sigma2(PatternHypergraph(6, {{1, 2, 3}, {4, 5, 6}})).size(), 6u);
}

TEST(Validity, ReportsEachClause) {
  const auto h = single_triple();
  EXPECT_TRUE(is_valid_schedule(h, parse_all({"v1", "v2", "v3", "p12", "p13", "p23", "t123"})));
  auto r = is_valid_schedule(h, parse_all({"v1", "p12"}));
  EXPECT_EQ(r.clause, ValidityClause::PairPrerequisite);
  EXPECT_EQ(r.position, 1u);
  r = is_valid_schedule(h, parse_all({"v1", "v2", "p12", "t123"}));
  EXPECT_EQ(r.clause, ValidityClause::TriplePrerequisite);
  r = is_valid_schedule(h, parse_all({"v1", "v1"}));
  EXPECT_EQ(r.clause, ValidityClause::Repeated);
  r = is_valid_schedule(h, parse_all({"v1", "v4"}));
  EXPECT_EQ(r.clause, ValidityClause::ElementKind);
  r = is_valid_schedule(h, parse_all({"v1", "v2"}));
  EXPECT_EQ(r.clause, ValidityClause::MissingTriple);
}

TEST(Enumeration, SingleTripleMatchesPermutationFilter) {
  const auto h = single_triple();
  LoadingSchedule all = parse_all({"v1", "v2", "v3", "p12", "p13", "p23", "t123"});
  std::sort(all.begin(), all.end());
  std::uint64_t brute = 0;
  do {
    if (is_valid_schedule(h, all)) ++brute;
  } while (std::next_permutation(all.begin(), all.end()));
  EXPECT_EQ(brute, 48u);
  EXPECT_EQ(count_complete_schedules(h), brute);

  std::uint64_t streamed = 0;
  LoadingSchedule previous;
  enumerate_complete_schedules(h, [&](const LoadingSchedule& s) {
    EXPECT_TRUE(is_valid_schedule(h, s));
    EXPECT_EQ(s.size(), 7u);
    if (!previous.empty()) EXPECT_NE(previous, s);
    previous = s;
    ++streamed;
    return true;
  });
  EXPECT_EQ(streamed, brute);
}

TEST(Enumeration, DisjointTriplesInterleave) {
  // Two independent chains of 7 interleave freely: C(14,7) * 48 * 48.
  const PatternHypergraph h(6, {{1, 2, 3}, {4, 5, 6}});
  const std::uint64_t expected = binomial(14, 7) * 48 * 48;
  EXPECT_EQ(expected, 7907328u);
  EXPECT_EQ(count_complete_schedules(h), expected);
}

TEST(Enumeration, StreamLengthMatchesCountOnSmallPatterns) {
  const PatternHypergraph h(4, {{1, 2, 3}, {1, 2, 4}});
  std::uint64_t n = 0;
  enumerate_complete_schedules(h, [&](const LoadingSchedule& s) {
    EXPECT_TRUE(is_valid_schedule(h, s));
    ++n;
    return true;
  });
  EXPECT_EQ(n, count_complete_schedules(h));
}

TEST(Enumeration, K4Count) {
  const PatternHypergraph k4(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  EXPECT_EQ(count_complete_schedules(k4), 1680384u);
}

TEST(Enumeration, IsolatedVertex) {
  const PatternHypergraph h(4, {{1, 2, 3}});
  EXPECT_THROW(count_complete_schedules(h), IsolatedVertex);
  EnumerationConfig c;
  c.mode = EnumerationConfig::Mode::Heuristic;
  EXPECT_THROW(heuristic_schedules(h, c), IsolatedVertex);
}

TEST(Heuristic, DeterministicDistinctValid) {
  const PatternHypergraph h7(7, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}, {1, 5, 7}});
  EnumerationConfig c;
  c.mode = EnumerationConfig::Mode::Heuristic;
  c.budget = 50;
  c.seed = 7;
  const auto a = heuristic_schedules(h7, c);
  const auto b = heuristic_schedules(h7, c);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 50u);
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : a) EXPECT_TRUE(is_valid_schedule(h7, s));

  const auto reference =
      parse_all({"v1", "v3", "v4", "v6", "v2", "v5", "v7", "p12", "p13", "p15", "p17",
                 "p23", "p24", "p34", "p45", "p46", "p56", "p57", "t123", "t157", "t234", "t456"});
  EXPECT_TRUE(is_valid_schedule(h7, reference));
  c.budget = 1;
  const auto injected = heuristic_schedules(h7, c, {reference});
  ASSERT_EQ(injected.size(), 1u);
  EXPECT_EQ(injected.front(), reference);
}

TEST(Heuristic, StopsWhenSpaceExhausted) {
  EnumerationConfig c;
  c.mode = EnumerationConfig::Mode::Heuristic;
  c.budget = 1000;
  EXPECT_EQ(heuristic_schedules(single_triple(), c).size(), 48u);
}
