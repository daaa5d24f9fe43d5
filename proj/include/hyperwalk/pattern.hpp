#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperwalk {

/// Unordered pair of pattern vertices, stored sorted (a < b).
struct Pair {
  int a = 0;
  int b = 0;

  static Pair of(int i, int j);
  bool contains(int v) const noexcept { return a == v || b == v; }
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Unordered triple of pattern vertices, stored sorted (a < b < c).
struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;

  static Triple of(int i, int j, int k);
  bool contains(int v) const noexcept { return a == v || b == v || c == v; }
  bool contains(const Pair& p) const noexcept { return contains(p.a) && contains(p.b); }
  std::array<Pair, 3> pairs() const noexcept {
    return {Pair{a, b}, Pair{a, c}, Pair{b, c}};
  }
  std::array<int, 3> vertices() const noexcept { return {a, b, c}; }
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// One entry of a loading schedule: a vertex, a pair or a triple.
class ScheduleElement {
 public:
  enum class Kind { Vertex = 1, Pair = 2, Triple = 3 };

  ScheduleElement() = default;

  static ScheduleElement vertex(int i);
  static ScheduleElement pair(int i, int j);
  static ScheduleElement triple(int i, int j, int k);
  static ScheduleElement of(const Pair& p) { return pair(p.a, p.b); }
  static ScheduleElement of(const Triple& t) { return triple(t.a, t.b, t.c); }

  /// Parses "v1", "p12", "t123" (single-digit indices) or the dashed form
  /// "p1-10", "t1-2-10".
  static ScheduleElement parse(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  int vertex_index() const noexcept { return idx_[0]; }
  Pair as_pair() const noexcept { return Pair{idx_[0], idx_[1]}; }
  Triple as_triple() const noexcept { return Triple{idx_[0], idx_[1], idx_[2]}; }
  std::size_t arity() const noexcept { return static_cast<std::size_t>(kind_); }
  int index(std::size_t slot) const noexcept { return idx_[slot]; }

  std::string str() const;

  friend bool operator==(const ScheduleElement&, const ScheduleElement&) = default;
  friend std::strong_ordering operator<=>(const ScheduleElement& lhs,
                                          const ScheduleElement& rhs);

 private:
  ScheduleElement(Kind kind, std::array<int, 3> idx) : kind_(kind), idx_(idx) {}

  Kind kind_ = Kind::Vertex;
  std::array<int, 3> idx_{};
};

using LoadingSchedule = std::vector<ScheduleElement>;

/// The constant-sized pattern H: vertices 1..kappa and a set of triples.
/// Directed patterns additionally remember one ordering per triple; that
/// ordering never affects schedule validity.
class PatternHypergraph {
 public:
  /// Canonicalizes and validates; throws ValidationError on repeated or
  /// out-of-range vertices or duplicate triples. For directed patterns the
  /// given vertex order of every triple is kept as its direction.
  PatternHypergraph(int kappa, const std::vector<std::array<int, 3>>& triples,
                    bool directed = false);

  int kappa() const noexcept { return kappa_; }
  bool directed() const noexcept { return directed_; }

  /// Sigma_3, sorted.
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  /// Sigma_2, sorted.
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  /// Direction of triples()[i] as given at construction (directed only).
  const std::vector<std::array<int, 3>>& directions() const noexcept { return directions_; }

  bool has_pair(const Pair& p) const;
  bool has_triple(const Triple& t) const;
  std::optional<std::size_t> pair_index(const Pair& p) const;
  std::optional<std::size_t> triple_index(const Triple& t) const;

  /// Vertices lying in no triple.
  std::vector<int> isolated_vertices() const;

 private:
  int kappa_;
  bool directed_;
  std::vector<Triple> triples_;
  std::vector<Pair> pairs_;
  std::vector<std::array<int, 3>> directions_;
};

/// Every 2-subset covered by some triple of H.
std::vector<Pair> derive_sigma2(const PatternHypergraph& pattern);

enum class ValidityClause {
  ElementKind = 1,         // (i) element not in Sigma_1 u Sigma_2 u Sigma_3
  PairPrerequisite = 2,    // (ii) pair before one of its vertices
  TriplePrerequisite = 3,  // (iii) triple before one of its pairs
  Repeated = 4,            // (iv) element appears twice
  MissingTriple = 5,       // (v) some triple of Sigma_3 never loaded
};

const char* to_string(ValidityClause clause);

struct ValidityReport {
  bool valid = true;
  std::optional<ValidityClause> clause;
  /// Position (0-based) of the offending element; for MissingTriple the
  /// schedule length.
  std::size_t position = 0;
  std::string message;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks all five clauses in one pass and reports the earliest violation.
ValidityReport is_valid_schedule(const PatternHypergraph& pattern,
                                 const LoadingSchedule& schedule);

std::string to_string(const LoadingSchedule& schedule);

}  // namespace hyperwalk
