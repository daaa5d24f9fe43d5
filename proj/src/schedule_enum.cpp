#include "hyperwalk/schedule_enum.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

SchedulePoset::SchedulePoset(const PatternHypergraph& pattern) {
  if (const auto isolated = pattern.isolated_vertices(); !isolated.empty()) {
    throw IsolatedVertex(isolated.front());
  }
  for (int v = 1; v <= pattern.kappa(); ++v) elements_.push_back(ScheduleElement::vertex(v));
  for (const Pair& p : pattern.pairs()) elements_.push_back(ScheduleElement::of(p));
  for (const Triple& t : pattern.triples()) elements_.push_back(ScheduleElement::of(t));
  if (elements_.size() > kMaxElements) {
    throw DomainError("schedule poset has " + std::to_string(elements_.size()) +
                      " elements; at most 64 supported");
  }
  prereq_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const ScheduleElement& e = elements_[i];
    if (e.kind() == ScheduleElement::Kind::Pair) {
      for (int v : {e.index(0), e.index(1)}) {
        prereq_[i] |= std::uint64_t{1} << index_of(ScheduleElement::vertex(v));
      }
    } else if (e.kind() == ScheduleElement::Kind::Triple) {
      for (const Pair& p : e.as_triple().pairs()) {
        prereq_[i] |= std::uint64_t{1} << index_of(ScheduleElement::of(p));
      }
    }
  }
}

std::uint64_t SchedulePoset::full_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

std::size_t SchedulePoset::index_of(const ScheduleElement& element) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), element);
  if (it == elements_.end() || *it != element) {
    throw InvalidSchedule("element " + element.str() + " is not part of the pattern");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

LoadingSchedule SchedulePoset::to_schedule(std::span<const std::uint8_t> order) const {
  LoadingSchedule out;
  out.reserve(order.size());
  for (std::uint8_t i : order) out.push_back(elements_[i]);
  return out;
}

std::optional<std::vector<std::uint8_t>> SchedulePoset::indices_of(
    const LoadingSchedule& schedule) const {
  if (schedule.size() != size()) return std::nullopt;
  std::vector<std::uint8_t> out;
  std::uint64_t seen = 0;
  for (const ScheduleElement& e : schedule) {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) return std::nullopt;
    const auto i = static_cast<std::size_t>(it - elements_.begin());
    if ((seen >> i) & 1u) return std::nullopt;
    seen |= std::uint64_t{1} << i;
    out.push_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

namespace {

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("schedule count exceeds 64 bits");
  }
  return out;
}

class DownsetCounter {
 public:
  explicit DownsetCounter(const SchedulePoset& poset) : poset_(poset) {}

  std::uint64_t count(std::uint64_t mask) {
    if (mask == poset_.full_mask()) return 1;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < poset_.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((mask & bit) == 0 && (poset_.prerequisites(i) & ~mask) == 0) {
        total = add_checked(total, count(mask | bit));
      }
    }
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const SchedulePoset& poset_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t count_complete_schedules(const PatternHypergraph& pattern) {
  const SchedulePoset poset(pattern);
  if (poset.size() <= 24) return DownsetCounter(poset).count(0);
  std::uint64_t total = 0;
  for_each_linear_extension(poset, [&](std::span<const std::uint8_t>) {
    total = add_checked(total, 1);
    return true;
  });
  return total;
}

std::uint64_t for_each_linear_extension(
    const SchedulePoset& poset,
    const std::function<bool(std::span<const std::uint8_t>)>& visit,
    std::optional<std::size_t> first) {
  const std::size_t n = poset.size();
  std::vector<std::uint8_t> order(n);
  // cursor[d]: next candidate index to try at depth d.
  std::vector<std::size_t> cursor(n + 1, 0);
  std::uint64_t mask = 0;
  std::uint64_t visited = 0;
  std::size_t depth = 0;
  if (n == 0) {
    ++visited;
    visit(order);
    return visited;
  }
  if (first) {
    if (*first >= n || poset.prerequisites(*first) != 0) return 0;
    order[0] = static_cast<std::uint8_t>(*first);
    mask = std::uint64_t{1} << *first;
    depth = 1;
    cursor[1] = 0;
  }
  const std::size_t floor = depth;
  while (true) {
    if (depth == n) {
      ++visited;
      if (!visit(order)) return visited;
      --depth;
      mask &= ~(std::uint64_t{1} << order[depth]);
      ++cursor[depth];
      continue;
    }
    std::size_t i = cursor[depth];
    while (i < n && (((mask >> i) & 1u) || (poset.prerequisites(i) & ~mask) != 0)) ++i;
    if (i == n) {
      if (depth == floor) return visited;
      --depth;
      mask &= ~(std::uint64_t{1} << order[depth]);
      ++cursor[depth];
      continue;
    }
    cursor[depth] = i;
    order[depth] = static_cast<std::uint8_t>(i);
    mask |= std::uint64_t{1} << i;
    ++depth;
    cursor[depth] = 0;
  }
}

std::uint64_t enumerate_complete_schedules(
    const PatternHypergraph& pattern,
    const std::function<bool(const LoadingSchedule&)>& visit) {
  const SchedulePoset poset(pattern);
  return for_each_linear_extension(poset, [&](std::span<const std::uint8_t> order) {
    return visit(poset.to_schedule(order));
  });
}

namespace {

std::vector<std::uint8_t> random_topological_sort(const SchedulePoset& poset, Rng& rng) {
  std::vector<std::uint8_t> order;
  std::uint64_t mask = 0;
  std::vector<std::uint8_t> available;
  while (order.size() < poset.size()) {
    available.clear();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (((mask >> i) & 1u) == 0 && (poset.prerequisites(i) & ~mask) == 0) {
        available.push_back(static_cast<std::uint8_t>(i));
      }
    }
    const auto pick = available[uniform_below(rng, available.size())];
    order.push_back(pick);
    mask |= std::uint64_t{1} << pick;
  }
  return order;
}

}  // namespace

std::vector<LoadingSchedule> heuristic_schedules(const PatternHypergraph& pattern,
                                                 const EnumerationConfig& config,
                                                 const std::vector<LoadingSchedule>& injected) {
  if (config.mode != EnumerationConfig::Mode::Heuristic) {
    throw DomainError("heuristic_schedules requires heuristic mode");
  }
  if (config.budget < 1) throw DomainError("heuristic budget must be at least 1");
  const SchedulePoset poset(pattern);
  std::vector<LoadingSchedule> out;
  std::unordered_set<std::string> seen;
  auto offer = [&](const std::vector<std::uint8_t>& order) {
    if (out.size() >= config.budget) return;
    if (seen.emplace(order.begin(), order.end()).second) out.push_back(poset.to_schedule(order));
  };
  for (const LoadingSchedule& s : injected) {
    auto order = poset.indices_of(s);
    if (!order || !is_valid_schedule(pattern, s)) {
      throw InvalidSchedule("injected schedule " + to_string(s) + " is not a complete valid schedule");
    }
    offer(*order);
  }
  Rng rng(config.seed);
  std::vector<std::uint8_t> current = random_topological_sort(poset, rng);
  offer(current);
  const std::uint64_t max_attempts = config.budget * 64 + 1024;
  for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < config.budget; ++attempt) {
    if (uniform_below(rng, 4) == 0 || poset.size() < 2) {
      current = random_topological_sort(poset, rng);
    } else {
      const std::uint64_t moves = 1 + uniform_below(rng, 4);
      for (std::uint64_t m = 0; m < moves; ++m) {
        const std::size_t p = uniform_below(rng, poset.size() - 1);
        if (!poset.precedes(current[p], current[p + 1])) std::swap(current[p], current[p + 1]);
      }
    }
    offer(current);
  }
  return out;
}

}  // namespace hyperwalk
