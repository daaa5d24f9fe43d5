#include "hyperwalk/walk_sim.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

TripleUniverse::TripleUniverse(int n) : n_(n) {
  if (n < 1 || n > 1625) throw DomainError("triple universe needs 1 <= n <= 1625");
  size_ = static_cast<std::uint32_t>(n) * n * n;
}

std::uint32_t TripleUniverse::encode(const VertexTriple& t) const {
  for (int v : t) {
    if (v < 1 || v > n_) throw DomainError("vertex " + std::to_string(v) + " outside 1..n");
  }
  return static_cast<std::uint32_t>(((t[0] - 1) * n_ + (t[1] - 1)) * n_ + (t[2] - 1)) + 1;
}

VertexTriple TripleUniverse::decode(std::uint32_t code) const {
  if (code < 1 || code > size_) throw DomainError("triple code out of range");
  const int c = static_cast<int>(code - 1);
  return {c / (n_ * n_) + 1, (c / n_) % n_ + 1, c % n_ + 1};
}

namespace {

void check_codes(const TripleCodes& set, const TripleUniverse& u) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > u.size()) throw DomainError("triple code out of range");
    if (i && set[i - 1] >= set[i]) throw DomainError("triple set must be sorted and unique");
  }
}

}  // namespace

TripleCodes build_lambda(const TripleCodes& gamma, const TripleUniverse& u) {
  check_codes(gamma, u);
  TripleCodes out(gamma);
  out.reserve(u.size());
  std::size_t g = 0;
  for (std::uint32_t c = 1; c <= u.size(); ++c) {
    if (g < gamma.size() && gamma[g] == c) {
      ++g;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

TripleCodes y_of(const std::vector<std::uint32_t>& r, const TripleCodes& gamma,
                 const TripleUniverse& u) {
  check_codes(gamma, u);
  TripleCodes out;
  for (std::uint32_t a : r) {
    if (a < 1 || a > u.size()) throw DomainError("index " + std::to_string(a) + " outside 1..n^3");
    // Lambda[a] is in Gamma exactly when a <= |Gamma|.
    if (a <= gamma.size()) out.push_back(gamma[a - 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> coupling_permutation(const TripleCodes& gamma,
                                                const TripleCodes& gamma_prime, std::uint32_t p,
                                                const TripleUniverse& u) {
  check_codes(gamma, u);
  check_codes(gamma_prime, u);
  if (p > u.size()) throw DomainError("p exceeds n^3");
  std::vector<std::uint32_t> pi(p, 0);
  std::vector<bool> used(p + 1, false);
  const std::size_t lim = std::min<std::size_t>(p, gamma.size());
  const std::size_t lim_prime = std::min<std::size_t>(p, gamma_prime.size());
  for (std::size_t a = 1; a <= lim; ++a) {
    auto it = std::lower_bound(gamma_prime.begin(), gamma_prime.begin() + lim_prime, gamma[a - 1]);
    if (it != gamma_prime.begin() + lim_prime && *it == gamma[a - 1]) {
      const auto a_prime = static_cast<std::uint32_t>(it - gamma_prime.begin()) + 1;
      pi[a - 1] = a_prime;
      used[a_prime] = true;
    }
  }
  std::uint32_t next = 1;
  for (std::uint32_t a = 1; a <= p; ++a) {
    if (pi[a - 1] != 0) continue;
    while (used[next]) ++next;
    pi[a - 1] = next;
    used[next] = true;
  }
  return pi;
}

std::size_t symmetric_difference_size(const TripleCodes& a, const TripleCodes& b) {
  std::vector<std::uint32_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

ClaimLambdaResult check_claim_lambda(const TripleCodes& gamma, const TripleCodes& gamma_prime,
                                     std::uint32_t p, const TripleUniverse& u) {
  check_codes(gamma, u);
  check_codes(gamma_prime, u);
  if (p > u.size()) throw DomainError("p exceeds n^3");
  // Lambda_1 is the first min(p, |Gamma|) entries of sorted Gamma.
  const TripleCodes l1(gamma.begin(), gamma.begin() + std::min<std::size_t>(p, gamma.size()));
  const TripleCodes l1p(gamma_prime.begin(),
                        gamma_prime.begin() + std::min<std::size_t>(p, gamma_prime.size()));
  ClaimLambdaResult out;
  out.lambda_delta = symmetric_difference_size(l1, l1p);
  out.gamma_delta = symmetric_difference_size(gamma, gamma_prime);
  out.holds = out.lambda_delta <= 2 * out.gamma_delta;
  return out;
}

Lemma3Report mc_lemma3(const TripleCodes& gamma, const TripleCodes& gamma_prime, std::uint32_t p,
                       std::uint32_t r, std::uint64_t trials, std::uint64_t seed,
                       const TripleUniverse& u, double min_frequency) {
  if (r < 1 || r > p) throw DomainError("mc_lemma3 needs 1 <= r <= p");
  const auto pi = coupling_permutation(gamma, gamma_prime, p, u);
  const double d = static_cast<double>(symmetric_difference_size(gamma, gamma_prime));
  const double ln_n = std::log(static_cast<double>(u.n()));
  const double log2_n = std::log2(static_cast<double>(u.n()));
  const double scaled = static_cast<double>(r) * d / p;
  Lemma3Report rep;
  rep.threshold = 22 * scaled + 100 * ln_n;
  rep.threshold_log2 = 22 * scaled + 100 * log2_n;
  rep.floor = 1 - 2 * std::exp2(-(11 * scaled + 50 * ln_n));
  rep.floor_log2 = 1 - 2 * std::exp2(-(11 * scaled + 50 * log2_n));
  // With r = p the subset is forced, so one evaluation covers every trial.
  const std::uint64_t runs = r == p ? 1 : trials;
  for (std::uint64_t t = 0; t < runs; ++t) {
    std::vector<std::uint32_t> rs;
    std::vector<std::uint32_t> prs;
    if (r == p) {
      for (std::uint32_t a = 1; a <= p; ++a) rs.push_back(a);
    } else {
      Rng rng = trial_rng(seed, t);
      for (std::uint64_t i : sample_subset(rng, p, r)) rs.push_back(static_cast<std::uint32_t>(i) + 1);
    }
    for (std::uint32_t a : rs) prs.push_back(pi[a - 1]);
    const std::size_t delta = symmetric_difference_size(y_of(rs, gamma, u), y_of(prs, gamma_prime, u));
    rep.max_observed = std::max(rep.max_observed, delta);
    rep.satisfied += static_cast<double>(delta) <= rep.threshold;
    rep.satisfied_log2 += static_cast<double>(delta) <= rep.threshold_log2;
  }
  if (r == p) {
    rep.satisfied *= trials;
    rep.satisfied_log2 *= trials;
  }
  rep.trials = trials;
  rep.frequency = trials ? static_cast<double>(rep.satisfied) / trials : 0;
  rep.frequency_log2 = trials ? static_cast<double>(rep.satisfied_log2) / trials : 0;
  rep.pass = trials > 0 && rep.frequency >= min_frequency;
  return rep;
}

PairSet make_pair_set(std::vector<VertexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

VertexTripleSet gamma_of(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk) {
  // Index F_ik by u and F_jk by v.
  std::map<int, std::vector<int>> by_u;
  for (const auto& [u, w] : f_ik) by_u[u].push_back(w);
  std::map<int, std::vector<int>> by_v;
  for (const auto& [v, w] : f_jk) by_v[v].push_back(w);
  VertexTripleSet out;
  for (const auto& [u, v] : f_ij) {
    auto iu = by_u.find(u);
    auto iv = by_v.find(v);
    if (iu == by_u.end() || iv == by_v.end()) continue;
    std::vector<int> common;
    std::set_intersection(iu->second.begin(), iu->second.end(), iv->second.begin(),
                          iv->second.end(), std::back_inserter(common));
    for (int w : common) out.push_back({u, v, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MarkedPairReport marked_pair_check(const PairSet& f_ij, const std::vector<int>& v_i,
                                   const std::vector<int>& v_j, VertexPair planted,
                                   const std::vector<PriorPairContext>& prior) {
  const std::int64_t r_i = static_cast<std::int64_t>(v_i.size());
  const std::int64_t r_j = static_cast<std::int64_t>(v_j.size());
  const std::int64_t f = static_cast<std::int64_t>(f_ij.size());
  if (r_i == 0 || r_j == 0) throw DomainError("marked_pair_check needs nonempty V_i and V_j");
  MarkedPairReport rep;
  rep.a = std::binary_search(f_ij.begin(), f_ij.end(), planted);
  std::map<int, std::int64_t> deg_u;
  std::map<int, std::int64_t> deg_v;
  for (int u : v_i) deg_u[u] = 0;
  for (int v : v_j) deg_v[v] = 0;
  for (const auto& [u, v] : f_ij) {
    if (!deg_u.count(u) || !deg_v.count(v)) throw DomainError("F_ij pair outside V_i x V_j");
    ++deg_u[u];
    ++deg_v[v];
  }
  // f/(2r) <= deg <= 2f/r, cleared of denominators.
  rep.b = std::all_of(deg_u.begin(), deg_u.end(), [&](const auto& kv) {
    return 2 * r_i * kv.second >= f && r_i * kv.second <= 2 * f;
  });
  rep.c = std::all_of(deg_v.begin(), deg_v.end(), [&](const auto& kv) {
    return 2 * r_j * kv.second >= f && r_j * kv.second <= 2 * f;
  });
  rep.d = true;
  std::map<int, std::vector<int>> ij_by_u;
  for (const auto& [u, v] : f_ij) ij_by_u[u].push_back(v);
  for (const auto& ctx : prior) {
    const std::int64_t r_k = static_cast<std::int64_t>(ctx.v_k.size());
    const std::int64_t f_ik = static_cast<std::int64_t>(ctx.f_ik.size());
    if (r_k == 0) throw DomainError("prior context needs nonempty V_k");
    std::map<std::pair<int, int>, std::int64_t> common;
    std::map<int, std::vector<int>> ik_by_u;
    for (const auto& [u, w] : ctx.f_ik) ik_by_u[u].push_back(w);
    for (const auto& [u, vs] : ij_by_u) {
      auto it = ik_by_u.find(u);
      if (it == ik_by_u.end()) continue;
      for (int v : vs) {
        for (int w : it->second) ++common[{v, w}];
      }
    }
    const __int128 rhs = static_cast<__int128>(11) * f * f_ik;
    for (const auto& [vw, count] : common) {
      if (static_cast<__int128>(count) * r_i * r_j * r_k > rhs) {
        rep.d = false;
        break;
      }
    }
  }
  return rep;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double centre = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

namespace {

// Uniform f-subset of {0..a-1} x {0..b-1}.
PairSet random_pairs(Rng& rng, int a, int b, std::int64_t f) {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(f));
  for (std::uint64_t code : sample_subset(rng, static_cast<std::uint64_t>(a) * b, f)) {
    out.emplace_back(static_cast<int>(code / b), static_cast<int>(code % b));
  }
  return make_pair_set(std::move(out));
}

std::vector<int> range_of(int count, int offset = 0) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = offset + i;
  return out;
}

std::size_t triple_delta(const VertexTripleSet& a, const VertexTripleSet& b) {
  std::vector<VertexTriple> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

PairSet transport(const PairSet& f, int u, int u_new) {
  std::vector<VertexPair> out;
  for (const auto& [a, b] : f) out.emplace_back(a == u ? u_new : a, b);
  return make_pair_set(std::move(out));
}

void check_pair_count(std::int64_t f, int a, int b, const char* name) {
  if (f < 0 || f > static_cast<std::int64_t>(a) * b) {
    throw DomainError(std::string(name) + " = " + std::to_string(f) + " is outside 0.." +
                      std::to_string(static_cast<std::int64_t>(a) * b));
  }
}

}  // namespace

RegularityReport mc_regularity(int r_i, int r_j, int r_k, std::int64_t f_ij, std::int64_t f_ik,
                               std::uint64_t trials, std::uint64_t seed, int kappa) {
  if (r_i < 1 || r_j < 1 || r_k < 1) throw DomainError("set sizes must be positive");
  check_pair_count(f_ij, r_i, r_j, "f_ij");
  check_pair_count(f_ik, r_i, r_k, "f_ik");
  RegularityReport rep;
  rep.trials = trials;
  const double fij = static_cast<double>(f_ij);
  const double fik = static_cast<double>(f_ik);
  rep.failure_bound = 2 * r_i * std::exp(-fij / (8.0 * r_i)) +
                      2 * r_j * std::exp(-fij / (8.0 * r_j)) +
                      static_cast<double>(r_j) * r_k * kappa *
                          std::exp2(-11 * fij * fik / (static_cast<double>(r_i) * r_j * r_k));
  rep.vacuous = rep.failure_bound >= 1;
  if (rep.vacuous) {
    rep.warnings.push_back("VacuousBound: the lemma's right-hand side is <= 0 for these parameters");
  }
  const auto v_i = range_of(r_i);
  const auto v_j = range_of(r_j);
  const auto v_k = range_of(r_k);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    const PairSet fij_set = random_pairs(rng, r_i, r_j, f_ij);
    const PairSet fik_set = random_pairs(rng, r_i, r_k, f_ik);
    const VertexPair planted = fij_set.empty() ? VertexPair{0, 0} : fij_set.front();
    const auto check = marked_pair_check(fij_set, v_i, v_j, planted, {{fik_set, v_k}});
    rep.failures += !(check.b && check.c && check.d);
  }
  rep.frequency = trials ? static_cast<double>(rep.failures) / trials : 0;
  std::tie(rep.wilson_low, rep.wilson_high) = wilson_interval(rep.failures, trials);
  rep.pass = trials > 0 && rep.wilson_low <= rep.failure_bound;
  return rep;
}

void SwapParams::validate() const {
  if (r_i < 1 || r_j < 1 || r_k < 1) throw DomainError("set sizes must be positive");
  check_pair_count(f_ij, r_i, r_j, "f_ij");
  check_pair_count(f_ik, r_i, r_k, "f_ik");
  check_pair_count(f_jk, r_j, r_k, "f_jk");
}

std::uint64_t triple_index_range(const SwapParams& p) {
  const __int128 num = static_cast<__int128>(11) * p.f_ij * p.f_ik * p.f_jk;
  const __int128 den = static_cast<__int128>(p.r_i) * p.r_j * p.r_k;
  if (den == 0) throw DomainError("set sizes must be positive");
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

std::size_t vertex_swap_delta(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk,
                              int u, int u_new) {
  const auto before = gamma_of(f_ij, f_ik, f_jk);
  const auto after = gamma_of(transport(f_ij, u, u_new), transport(f_ik, u, u_new), f_jk);
  return triple_delta(before, after);
}

std::size_t pair_swap_delta(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk,
                            VertexPair old_pair, VertexPair replacement) {
  std::vector<VertexPair> swapped;
  for (const auto& pr : f_ij) {
    if (pr != old_pair) swapped.push_back(pr);
  }
  swapped.push_back(replacement);
  const auto before = gamma_of(f_ij, f_ik, f_jk);
  const auto after = gamma_of(make_pair_set(std::move(swapped)), f_ik, f_jk);
  return triple_delta(before, after);
}

SwapReport mc_vertex_swap(const SwapParams& p, std::uint64_t trials, std::uint64_t seed,
                          double max_frequency) {
  p.validate();
  SwapReport rep;
  rep.trials = trials;
  const double ri = p.r_i, rj = p.r_j, rk = p.r_k;
  const double fij = p.f_ij, fik = p.f_ik, fjk = p.f_jk;
  rep.threshold = 44 * fij * fik * fjk / (ri * ri * rj * rk);
  rep.lemma_bound = 2 * std::exp(-fij / (3 * ri)) +
                    4 * fij / ri * (std::exp2(-11 * fjk * fik / (ri * rj * rk)) +
                                    std::exp(-fjk / (3 * rj)));
  const __int128 rhs = static_cast<__int128>(44) * p.f_ij * p.f_ik * p.f_jk;
  const __int128 scale = static_cast<__int128>(p.r_i) * p.r_i * p.r_j * p.r_k;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    const PairSet fij_set = random_pairs(rng, p.r_i, p.r_j, p.f_ij);
    const PairSet fik_set = random_pairs(rng, p.r_i, p.r_k, p.f_ik);
    const PairSet fjk_set = random_pairs(rng, p.r_j, p.r_k, p.f_jk);
    const int u = static_cast<int>(uniform_below(rng, p.r_i));
    // u' is a vertex outside V_i.
    const std::size_t delta = vertex_swap_delta(fij_set, fik_set, fjk_set, u, p.r_i);
    rep.max_delta = std::max(rep.max_delta, delta);
    rep.exceed += static_cast<__int128>(delta) * scale >= rhs;
  }
  rep.frequency = trials ? static_cast<double>(rep.exceed) / trials : 0;
  std::tie(rep.wilson_low, rep.wilson_high) = wilson_interval(rep.exceed, trials);
  rep.pass = trials > 0 && rep.frequency <= max_frequency;
  return rep;
}

SwapReport mc_pair_swap(const SwapParams& p, std::uint64_t trials, std::uint64_t seed,
                        double max_frequency) {
  p.validate();
  if (p.f_ij < 1 || p.f_ij >= static_cast<std::int64_t>(p.r_i) * p.r_j) {
    throw DomainError("pair swap needs 1 <= f_ij < r_i r_j");
  }
  SwapReport rep;
  rep.trials = trials;
  const double ri = p.r_i, rj = p.r_j, rk = p.r_k;
  const double fik = p.f_ik, fjk = p.f_jk;
  rep.threshold = 22 * fik * fjk / (ri * rj * rk);
  rep.lemma_bound = 2 * (std::exp2(-11 * fik * fjk / (ri * rj * rk)) + std::exp(-fik / (3 * ri)));
  const __int128 rhs = static_cast<__int128>(22) * p.f_ik * p.f_jk;
  const __int128 scale = static_cast<__int128>(p.r_i) * p.r_j * p.r_k;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    const PairSet fij_set = random_pairs(rng, p.r_i, p.r_j, p.f_ij);
    const PairSet fik_set = random_pairs(rng, p.r_i, p.r_k, p.f_ik);
    const PairSet fjk_set = random_pairs(rng, p.r_j, p.r_k, p.f_jk);
    const VertexPair old_pair = fij_set[uniform_below(rng, fij_set.size())];
    VertexPair replacement;
    do {
      replacement = {static_cast<int>(uniform_below(rng, p.r_i)),
                     static_cast<int>(uniform_below(rng, p.r_j))};
    } while (std::binary_search(fij_set.begin(), fij_set.end(), replacement));
    const std::size_t delta = pair_swap_delta(fij_set, fik_set, fjk_set, old_pair, replacement);
    rep.max_delta = std::max(rep.max_delta, delta);
    rep.exceed += static_cast<__int128>(delta) * scale >= rhs;
  }
  rep.frequency = trials ? static_cast<double>(rep.exceed) / trials : 0;
  std::tie(rep.wilson_low, rep.wilson_high) = wilson_interval(rep.exceed, trials);
  rep.pass = trials > 0 && rep.frequency <= max_frequency;
  return rep;
}

LevelSets sample_level_sets(const PatternHypergraph& pattern, int n, const LevelSizes& sizes,
                            Rng& rng) {
  const TripleUniverse universe(n);
  LevelSets out;
  for (int i = 1; i <= pattern.kappa(); ++i) {
    auto it = sizes.r.find(i);
    if (it == sizes.r.end() || it->second < 0 || it->second > n) {
      throw DomainError("r_" + std::to_string(i) + " missing or outside 0..n");
    }
    std::vector<int> vs;
    for (std::uint64_t x : sample_subset(rng, n, it->second)) vs.push_back(static_cast<int>(x) + 1);
    std::sort(vs.begin(), vs.end());
    out.v[i] = std::move(vs);
  }
  for (const Pair& p : pattern.pairs()) {
    auto it = sizes.f.find(p);
    const auto& va = out.v[p.a];
    const auto& vb = out.v[p.b];
    if (it == sizes.f.end()) throw DomainError("missing f for a pair");
    check_pair_count(it->second, static_cast<int>(va.size()), static_cast<int>(vb.size()), "f");
    PairSet local = random_pairs(rng, static_cast<int>(va.size()), static_cast<int>(vb.size()),
                                 it->second);
    std::vector<VertexPair> mapped;
    for (const auto& [x, y] : local) mapped.emplace_back(va[x], vb[y]);
    out.f[p] = make_pair_set(std::move(mapped));
  }
  for (const Triple& t : pattern.triples()) {
    const Pair ij{t.a, t.b}, ik{t.a, t.c}, jk{t.b, t.c};
    out.gamma[t] = gamma_of(out.f[ij], out.f[ik], out.f[jk]);
    const SwapParams sp{static_cast<int>(out.v[t.a].size()), static_cast<int>(out.v[t.b].size()),
                        static_cast<int>(out.v[t.c].size()), sizes.f.at(ij), sizes.f.at(ik),
                        sizes.f.at(jk)};
    std::uint64_t range = triple_index_range(sp);
    range = std::min<std::uint64_t>(range, universe.size());
    out.m_range[t] = range;
    auto it = sizes.e.find(t);
    if (it == sizes.e.end() || it->second < 0 || static_cast<std::uint64_t>(it->second) > range) {
      throw DomainError("e for a triple missing or above its index range");
    }
    std::vector<std::uint32_t> r;
    for (std::uint64_t x : sample_subset(rng, range, it->second)) {
      r.push_back(static_cast<std::uint32_t>(x) + 1);
    }
    std::sort(r.begin(), r.end());
    TripleCodes codes;
    for (const auto& tr : out.gamma[t]) codes.push_back(universe.encode(tr));
    VertexTripleSet e;
    for (std::uint32_t c : y_of(r, codes, universe)) e.push_back(universe.decode(c));
    out.r_triple[t] = std::move(r);
    out.e[t] = std::move(e);
  }
  return out;
}

namespace {

TripleCodes to_codes(std::vector<std::uint64_t> draws) {
  TripleCodes out;
  for (std::uint64_t d : draws) out.push_back(static_cast<std::uint32_t>(d) + 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClaimAudit audit_claim_lambda(int n, std::uint64_t count, std::uint64_t seed) {
  const TripleUniverse u(n);
  ClaimAudit audit;
  for (std::uint64_t t = 0; t < count; ++t) {
    Rng rng = trial_rng(seed, t);
    const TripleCodes gamma = to_codes(sample_subset(rng, u.size(), uniform_below(rng, u.size() + 1)));
    // Flip a random set of codes to get Gamma'.
    const TripleCodes flips = to_codes(sample_subset(rng, u.size(), uniform_below(rng, u.size() + 1)));
    TripleCodes gamma_prime;
    std::set_symmetric_difference(gamma.begin(), gamma.end(), flips.begin(), flips.end(),
                                  std::back_inserter(gamma_prime));
    const auto p = static_cast<std::uint32_t>(uniform_below(rng, u.size())) + 1;
    const auto res = check_claim_lambda(gamma, gamma_prime, p, u);
    ++audit.checked;
    if (!res.holds) ++audit.failures;
    if (res.lambda_delta > audit.worst_lambda_delta) {
      audit.worst_lambda_delta = res.lambda_delta;
      audit.worst_gamma_delta = res.gamma_delta;
    }
  }
  return audit;
}

std::pair<TripleCodes, TripleCodes> random_gamma_pair(const TripleUniverse& u, std::size_t size,
                                                      std::size_t delta, Rng& rng) {
  if (delta % 2 != 0 || delta / 2 > size || size + delta / 2 > u.size()) {
    throw DomainError("need even delta with delta/2 <= size and size + delta/2 <= n^3");
  }
  // size + delta/2 distinct codes: shared, only-in-Gamma, only-in-Gamma'.
  const auto draws = sample_subset(rng, u.size(), size + delta / 2);
  const std::size_t shared = size - delta / 2;
  TripleCodes gamma;
  TripleCodes gamma_prime;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const auto code = static_cast<std::uint32_t>(draws[i]) + 1;
    if (i < shared) {
      gamma.push_back(code);
      gamma_prime.push_back(code);
    } else if (i < size) {
      gamma.push_back(code);
    } else {
      gamma_prime.push_back(code);
    }
  }
  std::sort(gamma.begin(), gamma.end());
  std::sort(gamma_prime.begin(), gamma_prime.end());
  return {gamma, gamma_prime};
}

}  // namespace hyperwalk
