#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

/// Containment order on the elements a complete schedule must load:
/// vertex < pair containing it < triple containing that pair.
///
/// Elements are indexed in a fixed order (vertices, then pairs, then
/// triples, each ascending); enumeration is lexicographic in these indices.
class SchedulePoset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  /// Throws IsolatedVertex if a vertex of H lies in no triple, and
  /// DomainError beyond kMaxElements elements.
  explicit SchedulePoset(const PatternHypergraph& pattern);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ScheduleElement>& elements() const noexcept { return elements_; }
  /// Bitmask of the direct prerequisites of element i.
  std::uint64_t prerequisites(std::size_t i) const noexcept { return prereq_[i]; }
  std::uint64_t full_mask() const noexcept;

  bool precedes(std::size_t a, std::size_t b) const noexcept {
    return (prereq_[b] >> a) & 1u;
  }

  LoadingSchedule to_schedule(std::span<const std::uint8_t> order) const;
  /// Element indices for a complete schedule of this poset, or nullopt if
  /// the schedule uses an element outside the poset or misses one.
  std::optional<std::vector<std::uint8_t>> indices_of(const LoadingSchedule& schedule) const;

  std::size_t index_of(const ScheduleElement& element) const;

 private:
  std::vector<ScheduleElement> elements_;
  std::vector<std::uint64_t> prereq_;
};

struct EnumerationConfig {
  enum class Mode { Exhaustive, CountOnly, Heuristic };

  Mode mode = Mode::Exhaustive;
  /// Maximum number of distinct schedules to produce in heuristic mode.
  std::uint64_t budget = 1;
  std::uint64_t seed = kDefaultSeed;
};

/// Exact number of complete valid schedules (linear extensions).
/// Dynamic programming over downsets up to 24 elements, DFS beyond.
/// Throws DomainError if the count does not fit in 64 bits.
std::uint64_t count_complete_schedules(const PatternHypergraph& pattern);

/// Visits every complete valid schedule in lexicographic order of element
/// indices, as raw index sequences. The visitor returns false to stop.
/// When `first` is set only extensions starting with that element are
/// visited (one partition of the space). Returns the number visited.
std::uint64_t for_each_linear_extension(
    const SchedulePoset& poset,
    const std::function<bool(std::span<const std::uint8_t>)>& visit,
    std::optional<std::size_t> first = std::nullopt);

/// Same stream as for_each_linear_extension, materialized as schedules.
std::uint64_t enumerate_complete_schedules(
    const PatternHypergraph& pattern,
    const std::function<bool(const LoadingSchedule&)>& visit);

/// Distinct valid complete schedules from seeded random topological sorts
/// and adjacent-transposition moves; deterministic given config.seed.
/// `injected` schedules (validated) are emitted first and count towards
/// the budget. Stops early if the space is exhausted.
std::vector<LoadingSchedule> heuristic_schedules(
    const PatternHypergraph& pattern, const EnumerationConfig& config,
    const std::vector<LoadingSchedule>& injected = {});

}  // namespace hyperwalk
