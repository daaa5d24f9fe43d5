#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

/// Instance hypergraph on vertices 1..n. Undirected instances store sorted
/// triples; directed instances store ordered triples (vertices may repeat).
class InstanceHypergraph {
 public:
  InstanceHypergraph(int n, bool directed);

  int n() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Throws DomainError on out-of-range vertices, or repeated vertices in
  /// an undirected instance.
  void add(std::array<int, 3> triple, std::optional<int> weight = std::nullopt);
  bool contains(std::array<int, 3> triple) const;
  std::optional<int> weight(std::array<int, 3> triple) const;
  bool weighted() const noexcept { return !weights_.empty(); }

  /// Hyperedges in increasing code order.
  std::vector<std::array<int, 3>> hyperedges() const;
  std::uint64_t key(std::array<int, 3> triple) const;

 private:
  std::array<int, 3> canonical(std::array<int, 3> triple) const;

  int n_;
  bool directed_;
  std::unordered_set<std::uint64_t> edges_;
  std::unordered_map<std::uint64_t, int> weights_;
};

class QueryCounter {
 public:
  void record(std::uint64_t key) {
    ++total_;
    seen_.insert(key);
  }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t distinct() const noexcept { return seen_.size(); }
  void merge(const QueryCounter& other);

 private:
  std::uint64_t total_ = 0;
  std::unordered_set<std::uint64_t> seen_;
};

/// Membership query; one call, one counted query.
bool chi(const InstanceHypergraph& instance, std::array<int, 3> triple, QueryCounter& counter);
/// Weight-label query on a weighted instance (nullopt for non-edges).
std::optional<int> chi_weight(const InstanceHypergraph& instance, std::array<int, 3> triple,
                              QueryCounter& counter);

struct PlantedInstance {
  InstanceHypergraph instance;
  std::vector<int> embedding;  // embedding[i-1] = image of pattern vertex i
};

/// Background hyperedges independently with probability `density`, then
/// one copy of H on a random kappa-subset in random order.
PlantedInstance plant_pattern(int n, const PatternHypergraph& pattern, double density,
                              std::uint64_t seed);

/// Lexicographically least injective map phi (as the sequence
/// phi(1)..phi(kappa)) sending every pattern triple to a hyperedge.
std::optional<std::vector<int>> find_subhypergraph(const InstanceHypergraph& instance,
                                                   const PatternHypergraph& pattern,
                                                   QueryCounter& counter);

/// Every embedding, in lexicographic order; visitor returns false to stop.
std::uint64_t for_each_embedding(const InstanceHypergraph& instance,
                                 const PatternHypergraph& pattern, QueryCounter& counter,
                                 const std::function<bool(const std::vector<int>&)>& visit);

/// Re-checks that `embedding` is injective and maps every triple to a
/// hyperedge, without counting queries.
bool verify_embedding(const InstanceHypergraph& instance, const PatternHypergraph& pattern,
                      const std::vector<int>& embedding);

}  // namespace hyperwalk
