#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperwalk/oracle.hpp"
#include "hyperwalk/pattern.hpp"
#include "hyperwalk/rng.hpp"

namespace hyperwalk {

/// F: X^3 -> X with X = {1..n}, stored row-major (a, b, c).
class TernaryOperator {
 public:
  /// Throws ValidationError unless table has n^3 entries in 1..n.
  TernaryOperator(int n, std::vector<int> table);

  int n() const noexcept { return n_; }
  int operator()(int a, int b, int c) const {
    return table_[(static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1)];
  }
  const std::vector<int>& table() const noexcept { return table_; }
  void set(int a, int b, int c, int value);

  /// (a + b + c) mod n, shifted into 1..n.
  static TernaryOperator modular_sum(int n);
  static TernaryOperator constant(int n, int value);
  static TernaryOperator random(int n, Rng& rng);

 private:
  int n_;
  std::vector<int> table_;
};

enum class AssocCase { I = 1, II = 2 };

const char* to_string(AssocCase c);

/// Case i: a6 = F(a1,a2,a3), a7 = F(a2,a3,a4), F(a6,a4,a5) != F(a1,a7,a5).
/// Case ii: a6 = F(a2,a3,a4), a7 = F(a3,a4,a5), F(a1,a6,a5) != F(a1,a2,a7).
struct AssocCertificate {
  AssocCase which = AssocCase::I;
  std::array<int, 7> a{};  // a[0] = a_1
};

/// First 5-tuple (lexicographic) where the three bracketings disagree, or
/// nullopt when F is associative.
std::optional<std::array<int, 5>> is_associative(const TernaryOperator& f);

/// Lexicographically first certificate of the given case.
std::optional<AssocCertificate> find_certificate(const TernaryOperator& f, AssocCase which);
/// Completes a violating 5-tuple into a certificate of the given case.
AssocCertificate complete_certificate(const TernaryOperator& f, const std::array<int, 5>& tuple,
                                      AssocCase which);
bool verify_certificate(const TernaryOperator& f, const AssocCertificate& cert);

/// The seven-vertex directed pattern of the reduction: edges
/// (1,2,3),(2,3,4),(6,4,5),(1,7,5) for case i and the mirror
/// (2,3,4),(3,4,5),(1,6,5),(1,2,7) for case ii.
PatternHypergraph h7_pattern(AssocCase which = AssocCase::I);

struct Reduction {
  AssocCase which = AssocCase::I;
  InstanceHypergraph instance;  // directed; ordered triple (a,b,c) has weight F(a,b,c)
  PatternHypergraph pattern;
};

Reduction build_reduction(const TernaryOperator& f, AssocCase which = AssocCase::I);

/// Occurrences of the pattern in the weighted instance: maps X^7 with the
/// two equality-bearing edges carrying weight a6 and a7 and the two
/// remaining edges carrying different weights. Every weight lookup is one
/// counted query. Visits in lexicographic order of (a1..a5).
std::uint64_t for_each_occurrence(const Reduction& reduction, QueryCounter& counter,
                                  const std::function<bool(const AssocCertificate&)>& visit);
std::optional<AssocCertificate> find_occurrence(const Reduction& reduction, QueryCounter& counter);

}  // namespace hyperwalk
