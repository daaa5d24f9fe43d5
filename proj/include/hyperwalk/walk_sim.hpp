#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

using VertexPair = std::pair<int, int>;
using PairSet = std::vector<VertexPair>;              // sorted, unique
using VertexTriple = std::array<int, 3>;
using VertexTripleSet = std::vector<VertexTriple>;    // sorted, unique

/// V x V x V for V = {1..n}, ordered lexicographically. Triples are coded
/// by their 1-based position in that order.
class TripleUniverse {
 public:
  explicit TripleUniverse(int n);

  int n() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t encode(const VertexTriple& t) const;
  VertexTriple decode(std::uint32_t code) const;

 private:
  int n_;
  std::uint32_t size_;
};

/// Sorted unique codes of a TripleUniverse.
using TripleCodes = std::vector<std::uint32_t>;

/// Gamma in increasing order, then the complement in increasing order.
TripleCodes build_lambda(const TripleCodes& gamma, const TripleUniverse& u);
/// {Lambda[a] : a in R} intersected with Gamma. R holds 1-based indices.
TripleCodes y_of(const std::vector<std::uint32_t>& r, const TripleCodes& gamma,
                 const TripleUniverse& u);
/// Index matching of the coupling; result[a-1] = pi(a).
std::vector<std::uint32_t> coupling_permutation(const TripleCodes& gamma,
                                                const TripleCodes& gamma_prime, std::uint32_t p,
                                                const TripleUniverse& u);

struct ClaimLambdaResult {
  std::size_t lambda_delta = 0;  // |Lambda_1 sym-diff Lambda'_1|
  std::size_t gamma_delta = 0;   // |Gamma sym-diff Gamma'|
  bool holds = false;
};

ClaimLambdaResult check_claim_lambda(const TripleCodes& gamma, const TripleCodes& gamma_prime,
                                     std::uint32_t p, const TripleUniverse& u);

std::size_t symmetric_difference_size(const TripleCodes& a, const TripleCodes& b);

struct Lemma3Report {
  std::uint64_t trials = 0;
  std::uint64_t satisfied = 0;          // natural-log threshold
  std::uint64_t satisfied_log2 = 0;     // base-2 threshold
  double frequency = 0;
  double frequency_log2 = 0;
  double threshold = 0;                 // 22 r |D| / p + 100 ln n
  double threshold_log2 = 0;
  double floor = 0;                     // 1 - 2 (1/2)^{11 r |D| / p + 50 ln n}
  double floor_log2 = 0;
  std::size_t max_observed = 0;
  bool pass = false;                    // frequency >= min_frequency
};

Lemma3Report mc_lemma3(const TripleCodes& gamma, const TripleCodes& gamma_prime, std::uint32_t p,
                       std::uint32_t r, std::uint64_t trials, std::uint64_t seed,
                       const TripleUniverse& u, double min_frequency = 0.99);

/// Triples (u,v,w) with (u,v) in F_ij, (u,w) in F_ik and (v,w) in F_jk.
VertexTripleSet gamma_of(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk);

/// Sorts and deduplicates.
PairSet make_pair_set(std::vector<VertexPair> pairs);

struct PriorPairContext {
  PairSet f_ik;
  std::vector<int> v_k;
};

struct MarkedPairReport {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  bool marked() const { return a && b && c && d; }
};

/// Conditions (a)-(d) for the pair level F_ij with r_i = |V_i|, r_j = |V_j|,
/// f_ij = |F_ij|; (d) only against the supplied prior contexts.
MarkedPairReport marked_pair_check(const PairSet& f_ij, const std::vector<int>& v_i,
                                   const std::vector<int>& v_j, VertexPair planted,
                                   const std::vector<PriorPairContext>& prior = {});

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct RegularityReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double frequency = 0;
  double wilson_low = 0;
  double wilson_high = 0;
  double failure_bound = 0;  // 1 minus the lemma's right-hand side
  bool vacuous = false;      // right-hand side <= 0
  std::vector<std::string> warnings;
  bool pass = false;         // wilson_low <= failure_bound
};

/// F_ij and F_ik drawn uniformly from V_i x V_j and V_i x V_k; failure means
/// one of (b), (c), (d) is violated. `kappa` is the number of prior k the
/// union bound ranges over.
RegularityReport mc_regularity(int r_i, int r_j, int r_k, std::int64_t f_ij, std::int64_t f_ik,
                               std::uint64_t trials, std::uint64_t seed, int kappa = 1);

struct SwapParams {
  int r_i = 0;
  int r_j = 0;
  int r_k = 0;
  std::int64_t f_ij = 0;
  std::int64_t f_ik = 0;
  std::int64_t f_jk = 0;

  /// Throws DomainError when some f exceeds the product of its r's.
  void validate() const;
};

struct SwapReport {
  std::uint64_t trials = 0;
  std::uint64_t exceed = 0;
  double frequency = 0;
  double wilson_low = 0;
  double wilson_high = 0;
  double threshold = 0;      // the |Gamma sym-diff Gamma'| cut-off
  double lemma_bound = 0;    // the lemma's finite-size failure bound
  std::size_t max_delta = 0;
  bool pass = false;         // frequency <= max_frequency
};

/// |Gamma sym-diff Gamma'| after replacing vertex u of V_i by u_new, with
/// every (u, .) pair of F_ij and F_ik transported to (u_new, .).
std::size_t vertex_swap_delta(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk,
                              int u, int u_new);
/// |Gamma sym-diff Gamma'| for F'_ij = F_ij \ {old} + {replacement}.
std::size_t pair_swap_delta(const PairSet& f_ij, const PairSet& f_ik, const PairSet& f_jk,
                            VertexPair old_pair, VertexPair replacement);

SwapReport mc_vertex_swap(const SwapParams& params, std::uint64_t trials, std::uint64_t seed,
                          double max_frequency = 0.01);
SwapReport mc_pair_swap(const SwapParams& params, std::uint64_t trials, std::uint64_t seed,
                        double max_frequency = 0.01);

/// ceil(11 f_ij f_ik f_jk / (r_i r_j r_k)), the triple-level index range.
std::uint64_t triple_index_range(const SwapParams& params);

/// One draw of the walk data for a pattern over an n-vertex instance.
struct LevelSets {
  std::map<int, std::vector<int>> v;
  std::map<Pair, PairSet> f;
  std::map<Triple, VertexTripleSet> gamma;
  std::map<Triple, std::vector<std::uint32_t>> r_triple;  // R_t, 1-based
  std::map<Triple, VertexTripleSet> e;
  std::map<Triple, std::uint64_t> m_range;
};

struct LevelSizes {
  std::map<int, int> r;
  std::map<Pair, std::int64_t> f;
  std::map<Triple, std::int64_t> e;
};

/// V_i uniform r_i-subsets of {1..n}, F_ij uniform f_ij-subsets of
/// V_i x V_j, Gamma_ijk from the F's, R_t a uniform e_ijk-subset of
/// {1..ceil(M_ijk)}, E_ijk = Y(R_t, Gamma_ijk).
LevelSets sample_level_sets(const PatternHypergraph& pattern, int n, const LevelSizes& sizes,
                            Rng& rng);

struct ClaimAudit {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::size_t worst_lambda_delta = 0;
  std::size_t worst_gamma_delta = 0;
};

/// check_claim_lambda on `count` seeded random (Gamma, Gamma', p): Gamma
/// of uniform random size, Gamma' a random number of flips away, p uniform
/// in 1..n^3.
ClaimAudit audit_claim_lambda(int n, std::uint64_t count, std::uint64_t seed);

/// Gamma and Gamma' of equal size `size` with |Gamma sym-diff Gamma'| =
/// `delta` (even), drawn uniformly from the n^3 universe.
std::pair<TripleCodes, TripleCodes> random_gamma_pair(const TripleUniverse& u, std::size_t size,
                                                      std::size_t delta, Rng& rng);

}  // namespace hyperwalk
