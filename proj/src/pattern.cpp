#include "hyperwalk/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

Pair Pair::of(int i, int j) { return i < j ? Pair{i, j} : Pair{j, i}; }

Triple Triple::of(int i, int j, int k) {
  std::array<int, 3> v{i, j, k};
  std::sort(v.begin(), v.end());
  return Triple{v[0], v[1], v[2]};
}

ScheduleElement ScheduleElement::vertex(int i) { return ScheduleElement(Kind::Vertex, {i, 0, 0}); }

ScheduleElement ScheduleElement::pair(int i, int j) {
  const Pair p = Pair::of(i, j);
  return ScheduleElement(Kind::Pair, {p.a, p.b, 0});
}

ScheduleElement ScheduleElement::triple(int i, int j, int k) {
  const Triple t = Triple::of(i, j, k);
  return ScheduleElement(Kind::Triple, {t.a, t.b, t.c});
}

ScheduleElement ScheduleElement::parse(std::string_view token) {
  auto fail = [&]() -> ScheduleElement {
    throw ValidationError("bad schedule element '" + std::string(token) + "'");
  };
  if (token.size() < 2) return fail();
  std::size_t arity = 0;
  switch (token.front()) {
    case 'v': arity = 1; break;
    case 'p': arity = 2; break;
    case 't': arity = 3; break;
    default: return fail();
  }
  const std::string_view body = token.substr(1);
  std::vector<int> idx;
  if (body.find('-') == std::string_view::npos && arity > 1) {
    if (body.size() != arity) return fail();
    for (char ch : body) {
      if (ch < '0' || ch > '9') return fail();
      idx.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto dash = std::min(body.find('-', start), body.size());
      int value = 0;
      const auto part = body.substr(start, dash - start);
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) return fail();
      idx.push_back(value);
      start = dash + 1;
    }
    if (idx.size() != arity) return fail();
  }
  for (std::size_t a = 0; a < arity; ++a) {
    if (idx[a] < 1) return fail();
    for (std::size_t b = a + 1; b < arity; ++b) {
      if (idx[a] == idx[b]) return fail();
    }
  }
  switch (arity) {
    case 1: return vertex(idx[0]);
    case 2: return pair(idx[0], idx[1]);
    default: return triple(idx[0], idx[1], idx[2]);
  }
}

std::string ScheduleElement::str() const {
  static constexpr char prefix[] = {'?', 'v', 'p', 't'};
  std::string out(1, prefix[static_cast<int>(kind_)]);
  const bool compact = std::all_of(idx_.begin(), idx_.begin() + arity(),
                                   [](int v) { return v >= 0 && v <= 9; });
  for (std::size_t s = 0; s < arity(); ++s) {
    if (!compact && s > 0) out += '-';
    out += std::to_string(idx_[s]);
  }
  return out;
}

std::strong_ordering operator<=>(const ScheduleElement& lhs, const ScheduleElement& rhs) {
  if (auto c = static_cast<int>(lhs.kind_) <=> static_cast<int>(rhs.kind_); c != 0) return c;
  return lhs.idx_ <=> rhs.idx_;
}

PatternHypergraph::PatternHypergraph(int kappa,
                                     const std::vector<std::array<int, 3>>& triples,
                                     bool directed)
    : kappa_(kappa), directed_(directed) {
  if (kappa < 1) throw ValidationError("kappa must be at least 1");
  std::vector<std::pair<Triple, std::array<int, 3>>> items;
  for (const auto& raw : triples) {
    for (int v : raw) {
      if (v < 1 || v > kappa) {
        throw ValidationError("triple vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(kappa));
      }
    }
    if (raw[0] == raw[1] || raw[0] == raw[2] || raw[1] == raw[2]) {
      throw ValidationError("triple [" + std::to_string(raw[0]) + "," + std::to_string(raw[1]) +
                            "," + std::to_string(raw[2]) + "] repeats a vertex");
    }
    items.emplace_back(Triple::of(raw[0], raw[1], raw[2]), raw);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].first == items[i - 1].first) {
      const Triple& t = items[i].first;
      throw ValidationError("duplicate triple {" + std::to_string(t.a) + "," +
                            std::to_string(t.b) + "," + std::to_string(t.c) + "}");
    }
  }
  for (const auto& [t, dir] : items) {
    triples_.push_back(t);
    if (directed_) directions_.push_back(dir);
  }
  std::set<Pair> pairs;
  for (const Triple& t : triples_) {
    for (const Pair& p : t.pairs()) pairs.insert(p);
  }
  pairs_.assign(pairs.begin(), pairs.end());
}

bool PatternHypergraph::has_pair(const Pair& p) const { return pair_index(p).has_value(); }
bool PatternHypergraph::has_triple(const Triple& t) const { return triple_index(t).has_value(); }

std::optional<std::size_t> PatternHypergraph::pair_index(const Pair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::optional<std::size_t> PatternHypergraph::triple_index(const Triple& t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - triples_.begin());
}

std::vector<int> PatternHypergraph::isolated_vertices() const {
  std::vector<bool> used(static_cast<std::size_t>(kappa_) + 1, false);
  for (const Triple& t : triples_) {
    for (int v : t.vertices()) used[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= kappa_; ++v) {
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Pair> derive_sigma2(const PatternHypergraph& pattern) { return pattern.pairs(); }

const char* to_string(ValidityClause clause) {
  switch (clause) {
    case ValidityClause::ElementKind: return "i";
    case ValidityClause::PairPrerequisite: return "ii";
    case ValidityClause::TriplePrerequisite: return "iii";
    case ValidityClause::Repeated: return "iv";
    case ValidityClause::MissingTriple: return "v";
  }
  return "?";
}

ValidityReport is_valid_schedule(const PatternHypergraph& pattern,
                                 const LoadingSchedule& schedule) {
  auto violation = [](ValidityClause clause, std::size_t pos, std::string msg) {
    ValidityReport r;
    r.valid = false;
    r.clause = clause;
    r.position = pos;
    r.message = std::move(msg);
    return r;
  };
  std::set<ScheduleElement> seen;
  for (std::size_t t = 0; t < schedule.size(); ++t) {
    const ScheduleElement& e = schedule[t];
    const std::string where = "element " + std::to_string(t + 1) + " (" + e.str() + ")";
    bool in_sigma = true;
    for (std::size_t s = 0; s < e.arity(); ++s) {
      if (e.index(s) < 1 || e.index(s) > pattern.kappa()) in_sigma = false;
    }
    if (e.kind() == ScheduleElement::Kind::Pair && in_sigma) {
      in_sigma = pattern.has_pair(e.as_pair()) && e.index(0) != e.index(1);
    } else if (e.kind() == ScheduleElement::Kind::Triple && in_sigma) {
      in_sigma = pattern.has_triple(e.as_triple());
    }
    if (!in_sigma) {
      return violation(ValidityClause::ElementKind, t, where + " is not an element of H");
    }
    if (seen.count(e)) return violation(ValidityClause::Repeated, t, where + " repeats");
    if (e.kind() == ScheduleElement::Kind::Pair) {
      for (int v : {e.index(0), e.index(1)}) {
        if (!seen.count(ScheduleElement::vertex(v))) {
          return violation(ValidityClause::PairPrerequisite, t,
                           where + " precedes vertex " + std::to_string(v));
        }
      }
    } else if (e.kind() == ScheduleElement::Kind::Triple) {
      for (const Pair& p : e.as_triple().pairs()) {
        if (!seen.count(ScheduleElement::of(p))) {
          return violation(ValidityClause::TriplePrerequisite, t,
                           where + " precedes pair " + ScheduleElement::of(p).str());
        }
      }
    }
    seen.insert(e);
  }
  for (const Triple& tr : pattern.triples()) {
    if (!seen.count(ScheduleElement::of(tr))) {
      return violation(ValidityClause::MissingTriple, schedule.size(),
                       "triple " + ScheduleElement::of(tr).str() + " is never loaded");
    }
  }
  return ValidityReport{};
}

std::string to_string(const LoadingSchedule& schedule) {
  std::string out = "(";
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i) out += ",";
    out += schedule[i].str();
  }
  return out + ")";
}

}  // namespace hyperwalk
