#include "hyperwalk/oracle.hpp"

#include <algorithm>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

InstanceHypergraph::InstanceHypergraph(int n, bool directed) : n_(n), directed_(directed) {
  if (n < 0 || n > 2000000) throw DomainError("instance vertex count out of range");
}

std::array<int, 3> InstanceHypergraph::canonical(std::array<int, 3> t) const {
  for (int v : t) {
    if (v < 1 || v > n_) {
      throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
  }
  if (!directed_) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw DomainError("undirected hyperedge repeats a vertex");
  }
  return t;
}

std::uint64_t InstanceHypergraph::key(std::array<int, 3> triple) const {
  const auto t = canonical(triple);
  const std::uint64_t n = static_cast<std::uint64_t>(n_);
  return ((static_cast<std::uint64_t>(t[0] - 1) * n) + (t[1] - 1)) * n + (t[2] - 1);
}

void InstanceHypergraph::add(std::array<int, 3> triple, std::optional<int> weight) {
  const std::uint64_t k = key(triple);
  edges_.insert(k);
  if (weight) weights_[k] = *weight;
}

bool InstanceHypergraph::contains(std::array<int, 3> triple) const {
  return edges_.count(key(triple)) > 0;
}

std::optional<int> InstanceHypergraph::weight(std::array<int, 3> triple) const {
  auto it = weights_.find(key(triple));
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::array<int, 3>> InstanceHypergraph::hyperedges() const {
  std::vector<std::uint64_t> keys(edges_.begin(), edges_.end());
  std::sort(keys.begin(), keys.end());
  std::vector<std::array<int, 3>> out;
  out.reserve(keys.size());
  const std::uint64_t n = static_cast<std::uint64_t>(n_);
  for (std::uint64_t k : keys) {
    out.push_back({static_cast<int>(k / (n * n)) + 1, static_cast<int>((k / n) % n) + 1,
                   static_cast<int>(k % n) + 1});
  }
  return out;
}

void QueryCounter::merge(const QueryCounter& other) {
  total_ += other.total_;
  seen_.insert(other.seen_.begin(), other.seen_.end());
}

bool chi(const InstanceHypergraph& instance, std::array<int, 3> triple, QueryCounter& counter) {
  const std::uint64_t k = instance.key(triple);
  counter.record(k);
  return instance.contains(triple);
}

std::optional<int> chi_weight(const InstanceHypergraph& instance, std::array<int, 3> triple,
                              QueryCounter& counter) {
  counter.record(instance.key(triple));
  if (!instance.contains(triple)) return std::nullopt;
  return instance.weight(triple);
}

namespace {

// Image of a pattern triple under phi, in the pattern's direction when the
// pattern is directed.
std::array<int, 3> image(const PatternHypergraph& pattern, std::size_t t,
                         const std::vector<int>& phi) {
  if (pattern.directed()) {
    const auto& d = pattern.directions()[t];
    return {phi[d[0] - 1], phi[d[1] - 1], phi[d[2] - 1]};
  }
  const Triple& tr = pattern.triples()[t];
  return {phi[tr.a - 1], phi[tr.b - 1], phi[tr.c - 1]};
}

}  // namespace

PlantedInstance plant_pattern(int n, const PatternHypergraph& pattern, double density,
                              std::uint64_t seed) {
  if (n < pattern.kappa()) throw DomainError("instance needs at least kappa vertices");
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");
  Rng rng(seed);
  PlantedInstance out{InstanceHypergraph(n, pattern.directed()), {}};
  if (density > 0) {
    for (int a = 1; a <= n; ++a) {
      for (int b = pattern.directed() ? 1 : a + 1; b <= n; ++b) {
        for (int c = pattern.directed() ? 1 : b + 1; c <= n; ++c) {
          if (a == b || b == c || a == c) continue;
          if (uniform_unit(rng) < density) out.instance.add({a, b, c});
        }
      }
    }
  }
  for (std::uint64_t v : sample_subset(rng, n, pattern.kappa())) {
    out.embedding.push_back(static_cast<int>(v) + 1);
  }
  for (std::size_t t = 0; t < pattern.triples().size(); ++t) {
    out.instance.add(image(pattern, t, out.embedding));
  }
  return out;
}

std::uint64_t for_each_embedding(const InstanceHypergraph& instance,
                                 const PatternHypergraph& pattern, QueryCounter& counter,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  const int kappa = pattern.kappa();
  // checks[i]: triples whose largest vertex is i + 1.
  std::vector<std::vector<std::size_t>> checks(kappa);
  for (std::size_t t = 0; t < pattern.triples().size(); ++t) {
    checks[pattern.triples()[t].c - 1].push_back(t);
  }
  std::vector<int> phi(kappa, 0);
  std::vector<bool> used(instance.n() + 1, false);
  std::uint64_t found = 0;
  bool stop = false;
  std::function<void(int)> extend = [&](int i) {
    if (i == kappa) {
      ++found;
      if (!visit(phi)) stop = true;
      return;
    }
    for (int v = 1; v <= instance.n() && !stop; ++v) {
      if (used[v]) continue;
      phi[i] = v;
      bool ok = true;
      for (std::size_t t : checks[i]) {
        if (!chi(instance, image(pattern, t, phi), counter)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[v] = true;
      extend(i + 1);
      used[v] = false;
    }
    phi[i] = 0;
  };
  if (kappa <= instance.n()) extend(0);
  return found;
}

std::optional<std::vector<int>> find_subhypergraph(const InstanceHypergraph& instance,
                                                   const PatternHypergraph& pattern,
                                                   QueryCounter& counter) {
  std::optional<std::vector<int>> out;
  for_each_embedding(instance, pattern, counter, [&](const std::vector<int>& phi) {
    out = phi;
    return false;
  });
  return out;
}

bool verify_embedding(const InstanceHypergraph& instance, const PatternHypergraph& pattern,
                      const std::vector<int>& embedding) {
  if (static_cast<int>(embedding.size()) != pattern.kappa()) return false;
  std::vector<int> sorted(embedding);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : embedding) {
    if (v < 1 || v > instance.n()) return false;
  }
  for (std::size_t t = 0; t < pattern.triples().size(); ++t) {
    if (!instance.contains(image(pattern, t, embedding))) return false;
  }
  return true;
}

}  // namespace hyperwalk
