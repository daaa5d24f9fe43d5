#include <gtest/gtest.h>

#include <cmath>

#include "hyperwalk/error.hpp"
#include "hyperwalk/stats.hpp"

using namespace hyperwalk;

TEST(Hypergeometric, PmfMatchesBinomialFormula) {
  const HGParams p{10, 4, 3};
  // C(4,j) C(6,3-j) / C(10,3) with C(10,3) = 120: 20, 60, 36, 4.
  EXPECT_EQ(hg_pmf(p, 0), BigRational(1, 6));
  EXPECT_EQ(hg_pmf(p, 1), BigRational(1, 2));
  EXPECT_EQ(hg_pmf(p, 2), BigRational(3, 10));
  EXPECT_EQ(hg_pmf(p, 3), BigRational(1, 30));
  EXPECT_EQ(p.mean(), BigRational(6, 5));
  EXPECT_THROW(hg_pmf(p, 4), DomainError);
  EXPECT_THROW((HGParams{5, 6, 1}.validate()), DomainError);
}

TEST(Hypergeometric, TableSumsToOneWithExactMean) {
  for (std::uint32_t N : {1u, 7u, 23u}) {
    for (std::uint32_t m = 0; m <= N; m += 3) {
      for (std::uint32_t r = 0; r <= N; r += 2) {
        const HGParams p{N, m, r};
        const auto t = hg_pmf_table(p);
        BigRational total = 0;
        BigRational mean = 0;
        for (std::size_t j = 0; j < t.size(); ++j) {
          total += t[j];
          mean += t[j] * static_cast<long>(j);
          EXPECT_EQ(t[j], hg_pmf(p, j));
        }
        EXPECT_EQ(total, 1);
        EXPECT_EQ(mean, p.mean());
      }
    }
  }
}

TEST(Hypergeometric, SamplerPassesKolmogorovSmirnov) {
  const HGParams p{60, 25, 20};
  const auto pmf = hg_pmf_table(p);
  const int draws = 20000;
  std::vector<int> counts(pmf.size(), 0);
  Rng rng(12345);
  for (int i = 0; i < draws; ++i) ++counts[hg_sample(p, rng)];
  double cdf = 0;
  double ecdf = 0;
  double d = 0;
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    cdf += pmf[j].get_d();
    ecdf += static_cast<double>(counts[j]) / draws;
    d = std::max(d, std::abs(cdf - ecdf));
  }
  // alpha = 0.001 critical value for the one-sample statistic.
  EXPECT_LT(d, 1.95 / std::sqrt(static_cast<double>(draws)));
}

TEST(TailBounds, LowerEnclosureIsBelowTheRealValue) {
  const BigRational mu(7, 2);
  const BigRational delta(1, 2);
  const double up = std::exp(-3.5 * 0.25 / 3);
  const double lo = std::exp(-3.5 * 0.25 / 2);
  const double large = std::pow(2.0, -(1 + 5.0) * 3.5);
  EXPECT_LE(tail_bound_lower(TailBound::Upper, mu, delta).get_d(), up);
  EXPECT_GT(tail_bound_lower(TailBound::Upper, mu, delta).get_d(), up * (1 - 1e-12));
  EXPECT_LE(tail_bound_lower(TailBound::Lower, mu, delta).get_d(), lo);
  EXPECT_GT(tail_bound_lower(TailBound::Lower, mu, delta).get_d(), lo * (1 - 1e-12));
  EXPECT_LE(tail_bound_lower(TailBound::LargeUpper, mu, 5).get_d(), large);
  EXPECT_GT(tail_bound_lower(TailBound::LargeUpper, mu, 5).get_d(), large * (1 - 1e-12));
}

TEST(TailBounds, ExactTailByDirectSummation) {
  const HGParams p{20, 8, 10};
  const auto pmf = hg_pmf_table(p);
  // mu = 4; (1 + 1/2) mu = 6, so the upper tail is Pr[X >= 6].
  BigRational upper = 0;
  for (std::size_t j = 6; j < pmf.size(); ++j) upper += pmf[j];
  EXPECT_EQ(exact_tail(TailBound::Upper, p, BigRational(1, 2)), upper);
  BigRational lower = 0;
  for (std::size_t j = 0; j <= 2; ++j) lower += pmf[j];
  EXPECT_EQ(exact_tail(TailBound::Lower, p, BigRational(1, 2)), lower);
}

TEST(TailBounds, SmallGridHasNoViolations) {
  const auto report = verify_tail_bounds(TailGrid::standard(20));
  EXPECT_TRUE(report.pass());
  EXPECT_GT(report.checked[0], 0u);
  EXPECT_GT(report.checked[1], 0u);
  EXPECT_GT(report.checked[2], 0u);
}
