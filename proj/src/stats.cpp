#include "hyperwalk/stats.hpp"

#include <mpfr.h>

#include <sstream>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

namespace {

mpz_class binomial(std::uint32_t n, std::uint32_t k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class ceil_of(const BigRational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class floor_of(const BigRational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// 2e - 1 lies in (4.43, 4.44); deltas at or below the upper end are
// rejected for bound (3).
const BigRational kLargeDeltaFloor(444, 100);

bool hypothesis_holds(TailBound bound, const BigRational& delta) {
  switch (bound) {
    case TailBound::Upper: return delta > 0 && delta <= 1;
    case TailBound::Lower: return delta > 0 && delta < 1;
    case TailBound::LargeUpper: return delta > kLargeDeltaFloor;
  }
  return false;
}

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, 160); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

void HGParams::validate() const {
  if (m > N || r > N) {
    throw DomainError("HG(" + std::to_string(N) + "," + std::to_string(m) + "," +
                      std::to_string(r) + ") needs m <= N and r <= N");
  }
}

BigRational HGParams::mean() const {
  if (N == 0) return BigRational(0);
  BigRational out(mpz_class(r) * mpz_class(m), mpz_class(N));
  out.canonicalize();
  return out;
}

BigRational hg_pmf(const HGParams& p, std::uint32_t j) {
  p.validate();
  if (j > p.r) {
    throw DomainError("pmf index " + std::to_string(j) + " outside 0.." + std::to_string(p.r));
  }
  const mpz_class num = binomial(p.m, j) * (p.r - j <= p.N - p.m ? binomial(p.N - p.m, p.r - j)
                                                                  : mpz_class(0));
  BigRational out(num, binomial(p.N, p.r));
  out.canonicalize();
  return out;
}

std::vector<BigRational> hg_pmf_table(const HGParams& p) {
  p.validate();
  std::vector<BigRational> out;
  out.reserve(p.r + 1);
  for (std::uint32_t j = 0; j <= p.r; ++j) out.push_back(hg_pmf(p, j));
  return out;
}

std::uint32_t hg_sample(const HGParams& p, Rng& rng) {
  p.validate();
  std::uint32_t hits = 0;
  for (std::uint64_t i : sample_subset(rng, p.N, p.r)) hits += i < p.m;
  return hits;
}

BigRational tail_bound_lower(TailBound bound, const BigRational& mu, const BigRational& delta) {
  Mpfr arg;
  Mpfr value;
  BigRational exponent;
  // Rounding the argument down and then the increasing function down gives
  // a lower end of the enclosure.
  switch (bound) {
    case TailBound::Upper:
      exponent = -mu * delta * delta / 3;
      mpfr_set_q(arg.get(), exponent.get_mpq_t(), MPFR_RNDD);
      mpfr_exp(value.get(), arg.get(), MPFR_RNDD);
      break;
    case TailBound::Lower:
      exponent = -mu * delta * delta / 2;
      mpfr_set_q(arg.get(), exponent.get_mpq_t(), MPFR_RNDD);
      mpfr_exp(value.get(), arg.get(), MPFR_RNDD);
      break;
    case TailBound::LargeUpper:
      exponent = -(1 + delta) * mu;
      mpfr_set_q(arg.get(), exponent.get_mpq_t(), MPFR_RNDD);
      mpfr_exp2(value.get(), arg.get(), MPFR_RNDD);
      break;
  }
  BigRational out;
  mpfr_get_q(out.get_mpq_t(), value.get());
  return out;
}

namespace {

// Tail numerators over the common denominator C(N, r).
struct TailTable {
  std::vector<mpz_class> suffix;  // suffix[j] = sum_{i >= j}
  std::vector<mpz_class> prefix;  // prefix[j] = sum_{i <= j}
  mpz_class denominator;

  explicit TailTable(const HGParams& p) {
    std::vector<mpz_class> num(p.r + 1);
    for (std::uint32_t j = 0; j <= p.r; ++j) {
      if (p.r - j <= p.N - p.m) num[j] = binomial(p.m, j) * binomial(p.N - p.m, p.r - j);
    }
    suffix.assign(p.r + 2, mpz_class(0));
    prefix.assign(p.r + 1, mpz_class(0));
    for (std::uint32_t j = p.r + 1; j-- > 0;) suffix[j] = suffix[j + 1] + num[j];
    for (std::uint32_t j = 0; j <= p.r; ++j) prefix[j] = (j ? prefix[j - 1] : mpz_class(0)) + num[j];
    denominator = binomial(p.N, p.r);
  }

  BigRational at_least(const mpz_class& j, std::uint32_t r) const {
    if (j <= 0) return over(suffix[0]);
    if (j > r) return BigRational(0);
    return over(suffix[j.get_ui()]);
  }

  BigRational at_most(const mpz_class& j, std::uint32_t r) const {
    if (j < 0) return BigRational(0);
    if (j >= r) return over(prefix[r]);
    return over(prefix[j.get_ui()]);
  }

  BigRational over(const mpz_class& num) const {
    BigRational out(num, denominator);
    out.canonicalize();
    return out;
  }
};

BigRational tail_from_table(TailBound bound, const TailTable& table, const HGParams& p,
                            const BigRational& delta) {
  const BigRational mu = p.mean();
  switch (bound) {
    case TailBound::Upper: return table.at_least(ceil_of((1 + delta) * mu), p.r);
    case TailBound::Lower: return table.at_most(floor_of((1 - delta) * mu), p.r);
    case TailBound::LargeUpper: return table.at_least(floor_of((1 + delta) * mu) + 1, p.r);
  }
  return BigRational(0);
}

std::string describe(const TailGrid& grid) {
  std::ostringstream os;
  auto list = [&](const std::vector<BigRational>& ds) {
    os << "{";
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i].get_str();
    os << "}";
  };
  os << "N<=" << grid.n_max << ", all m,r; delta(1)=";
  list(grid.delta_upper);
  os << " delta(2)=";
  list(grid.delta_lower);
  os << " delta(3)=";
  list(grid.delta_large);
  return os.str();
}

}  // namespace

BigRational exact_tail(TailBound bound, const HGParams& p, const BigRational& delta) {
  p.validate();
  return tail_from_table(bound, TailTable(p), p, delta);
}

TailGrid TailGrid::standard(std::uint32_t n_max) {
  TailGrid g;
  g.n_max = n_max;
  g.delta_upper = {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4), BigRational(1)};
  // delta = 1 is outside the open interval of bound (2).
  g.delta_lower = {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4)};
  g.delta_large = {BigRational(5), BigRational(6), BigRational(8)};
  return g;
}

TailBoundReport verify_tail_bounds(const TailGrid& grid) {
  TailBoundReport report;
  report.grid = describe(grid);
  const std::vector<BigRational>* deltas[3] = {&grid.delta_upper, &grid.delta_lower,
                                               &grid.delta_large};
  const TailBound bounds[3] = {TailBound::Upper, TailBound::Lower, TailBound::LargeUpper};
  for (std::uint32_t N = 0; N <= grid.n_max; ++N) {
    for (std::uint32_t m = 0; m <= N; ++m) {
      for (std::uint32_t r = 0; r <= N; ++r) {
        const HGParams p{N, m, r};
        const TailTable table(p);
        const BigRational mu = p.mean();
        for (int b = 0; b < 3; ++b) {
          for (const BigRational& delta : *deltas[b]) {
            if (!hypothesis_holds(bounds[b], delta)) {
              ++report.skipped;
              continue;
            }
            TailBoundReport::Point pt;
            pt.params = p;
            pt.bound = bounds[b];
            pt.delta = delta;
            pt.tail = tail_from_table(bounds[b], table, p, delta);
            pt.bound_lower = tail_bound_lower(bounds[b], mu, delta);
            pt.holds = bounds[b] == TailBound::LargeUpper ? pt.tail < pt.bound_lower
                                                          : pt.tail <= pt.bound_lower;
            ++report.checked[b];
            if (!pt.holds) report.violations.push_back(pt);
            if (pt.tail > 0) {
              const double ratio = BigRational(pt.tail / pt.bound_lower).get_d();
              if (ratio > report.tightest_ratio[b]) {
                report.tightest_ratio[b] = ratio;
                report.tightest[b] = pt;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hyperwalk
