#include "hyperwalk/rng.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hyperwalk {

std::vector<std::uint64_t> sample_subset(Rng& rng, std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("sample_subset: k exceeds n");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  // Sparse Fisher-Yates: only displaced slots are materialized.
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + uniform_below(rng, n - i);
    const std::uint64_t vi = at(i);
    const std::uint64_t vj = at(j);
    out.push_back(vj);
    moved[j] = vi;
  }
  return out;
}

}  // namespace hyperwalk
