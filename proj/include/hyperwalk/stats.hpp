#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperwalk/rational.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

/// HG(N, m, r): successes when drawing r of N items without replacement,
/// m of which are successes.
struct HGParams {
  std::uint32_t N = 0;
  std::uint32_t m = 0;
  std::uint32_t r = 0;

  /// Throws DomainError unless m <= N and r <= N.
  void validate() const;
  BigRational mean() const;
};

/// Exact Pr[X = j]. Throws DomainError if j > r.
BigRational hg_pmf(const HGParams& p, std::uint32_t j);
/// Pr[X = 0..r] in one pass.
std::vector<BigRational> hg_pmf_table(const HGParams& p);

/// Draws an r-subset of {0..N-1} by partial shuffle and counts indices < m.
std::uint32_t hg_sample(const HGParams& p, Rng& rng);

enum class TailBound {
  Upper = 1,       // Pr[X >= (1+d)mu] <= exp(-mu d^2/3),  0 < d <= 1
  Lower = 2,       // Pr[X <= (1-d)mu] <= exp(-mu d^2/2),  0 < d < 1
  LargeUpper = 3,  // Pr[X >  (1+d)mu] <  2^{-(1+d)mu},    d > 2e-1
};

/// Lower end of the outward-rounded enclosure of the bound, as an exact
/// rational.
BigRational tail_bound_lower(TailBound bound, const BigRational& mu, const BigRational& delta);
/// Exact tail probability for the event of `bound`.
BigRational exact_tail(TailBound bound, const HGParams& p, const BigRational& delta);

struct TailGrid {
  std::uint32_t n_max = 60;
  std::vector<BigRational> delta_upper;
  std::vector<BigRational> delta_lower;
  std::vector<BigRational> delta_large;

  /// All N <= n_max with every m, r, and the default delta sets.
  static TailGrid standard(std::uint32_t n_max = 60);
};

struct TailBoundReport {
  struct Point {
    HGParams params;
    TailBound bound = TailBound::Upper;
    BigRational delta;
    BigRational tail;
    BigRational bound_lower;
    bool holds = false;
  };

  std::string grid;
  std::uint64_t checked[3] = {0, 0, 0};
  /// Deltas skipped because they violate the bound's hypothesis.
  std::uint64_t skipped = 0;
  std::vector<Point> violations;
  /// Point with the largest tail/bound ratio per bound.
  Point tightest[3];
  double tightest_ratio[3] = {0, 0, 0};

  bool pass() const { return violations.empty(); }
};

TailBoundReport verify_tail_bounds(const TailGrid& grid);

}  // namespace hyperwalk
