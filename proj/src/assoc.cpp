#include "hyperwalk/assoc.hpp"

#include "hyperwalk/error.hpp"

namespace hyperwalk {

TernaryOperator::TernaryOperator(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
  if (n < 1 || n > 1000) throw ValidationError("operator domain size must be in 1..1000");
  const std::size_t expected = static_cast<std::size_t>(n) * n * n;
  if (table_.size() != expected) {
    throw ValidationError("operator table has " + std::to_string(table_.size()) +
                          " entries; expected n^3 = " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 1 || table_[i] > n) {
      throw ValidationError("operator table entry " + std::to_string(i) + " = " +
                            std::to_string(table_[i]) + " is outside 1.." + std::to_string(n));
    }
  }
}

void TernaryOperator::set(int a, int b, int c, int value) {
  if (value < 1 || value > n_) throw ValidationError("operator value out of range");
  table_[(static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1)] = value;
}

TernaryOperator TernaryOperator::modular_sum(int n) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) t.push_back((a + b + c - 3) % n + 1);
  return TernaryOperator(n, std::move(t));
}

TernaryOperator TernaryOperator::constant(int n, int value) {
  return TernaryOperator(n, std::vector<int>(static_cast<std::size_t>(n) * n * n, value));
}

TernaryOperator TernaryOperator::random(int n, Rng& rng) {
  std::vector<int> t(static_cast<std::size_t>(n) * n * n);
  for (int& v : t) v = static_cast<int>(uniform_below(rng, n)) + 1;
  return TernaryOperator(n, std::move(t));
}

const char* to_string(AssocCase c) { return c == AssocCase::I ? "i" : "ii"; }

namespace {

// Visits X^5 in lexicographic order.
template <typename Fn>
bool scan5(int n, Fn&& fn) {
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          for (int e = 1; e <= n; ++e)
            if (fn(std::array<int, 5>{a, b, c, d, e})) return true;
  return false;
}

bool violates(const TernaryOperator& f, const std::array<int, 5>& x, AssocCase which) {
  const auto [a, b, c, d, e] = x;
  const int middle = f(a, f(b, c, d), e);
  if (which == AssocCase::I) return f(f(a, b, c), d, e) != middle;
  return middle != f(a, b, f(c, d, e));
}

}  // namespace

std::optional<std::array<int, 5>> is_associative(const TernaryOperator& f) {
  std::optional<std::array<int, 5>> out;
  scan5(f.n(), [&](const std::array<int, 5>& x) {
    if (violates(f, x, AssocCase::I) || violates(f, x, AssocCase::II)) {
      out = x;
      return true;
    }
    return false;
  });
  return out;
}

AssocCertificate complete_certificate(const TernaryOperator& f, const std::array<int, 5>& x,
                                      AssocCase which) {
  AssocCertificate cert;
  cert.which = which;
  for (int i = 0; i < 5; ++i) cert.a[i] = x[i];
  if (which == AssocCase::I) {
    cert.a[5] = f(x[0], x[1], x[2]);
    cert.a[6] = f(x[1], x[2], x[3]);
  } else {
    cert.a[5] = f(x[1], x[2], x[3]);
    cert.a[6] = f(x[2], x[3], x[4]);
  }
  return cert;
}

std::optional<AssocCertificate> find_certificate(const TernaryOperator& f, AssocCase which) {
  std::optional<AssocCertificate> out;
  scan5(f.n(), [&](const std::array<int, 5>& x) {
    if (!violates(f, x, which)) return false;
    out = complete_certificate(f, x, which);
    return true;
  });
  return out;
}

bool verify_certificate(const TernaryOperator& f, const AssocCertificate& cert) {
  for (int v : cert.a) {
    if (v < 1 || v > f.n()) return false;
  }
  const auto& a = cert.a;
  if (cert.which == AssocCase::I) {
    return f(a[0], a[1], a[2]) == a[5] && f(a[1], a[2], a[3]) == a[6] &&
           f(a[5], a[3], a[4]) != f(a[0], a[6], a[4]);
  }
  return f(a[1], a[2], a[3]) == a[5] && f(a[2], a[3], a[4]) == a[6] &&
         f(a[0], a[5], a[4]) != f(a[0], a[1], a[6]);
}

PatternHypergraph h7_pattern(AssocCase which) {
  if (which == AssocCase::I) {
    return PatternHypergraph(7, {{1, 2, 3}, {2, 3, 4}, {6, 4, 5}, {1, 7, 5}}, true);
  }
  return PatternHypergraph(7, {{2, 3, 4}, {3, 4, 5}, {1, 6, 5}, {1, 2, 7}}, true);
}

Reduction build_reduction(const TernaryOperator& f, AssocCase which) {
  Reduction out{which, InstanceHypergraph(f.n(), true), h7_pattern(which)};
  const int n = f.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) out.instance.add({a, b, c}, f(a, b, c));
  return out;
}

std::uint64_t for_each_occurrence(const Reduction& reduction, QueryCounter& counter,
                                  const std::function<bool(const AssocCertificate&)>& visit) {
  const InstanceHypergraph& g = reduction.instance;
  const int n = g.n();
  auto w = [&](int a, int b, int c) -> int {
    const auto v = chi_weight(g, {a, b, c}, counter);
    if (!v) throw DomainError("reduction instance is missing a weighted triple");
    return *v;
  };
  std::uint64_t found = 0;
  AssocCertificate cert;
  cert.which = reduction.which;
  auto& a = cert.a;
  for (a[0] = 1; a[0] <= n; ++a[0])
    for (a[1] = 1; a[1] <= n; ++a[1])
      for (a[2] = 1; a[2] <= n; ++a[2])
        for (a[3] = 1; a[3] <= n; ++a[3])
          for (a[4] = 1; a[4] <= n; ++a[4]) {
            // The two equality-bearing edges fix a6 and a7.
            if (reduction.which == AssocCase::I) {
              a[5] = w(a[0], a[1], a[2]);
              a[6] = w(a[1], a[2], a[3]);
              if (w(a[5], a[3], a[4]) == w(a[0], a[6], a[4])) continue;
            } else {
              a[5] = w(a[1], a[2], a[3]);
              a[6] = w(a[2], a[3], a[4]);
              if (w(a[0], a[5], a[4]) == w(a[0], a[1], a[6])) continue;
            }
            ++found;
            if (!visit(cert)) return found;
          }
  return found;
}

std::optional<AssocCertificate> find_occurrence(const Reduction& reduction, QueryCounter& counter) {
  std::optional<AssocCertificate> out;
  for_each_occurrence(reduction, counter, [&](const AssocCertificate& c) {
    out = c;
    return false;
  });
  return out;
}

}  // namespace hyperwalk
