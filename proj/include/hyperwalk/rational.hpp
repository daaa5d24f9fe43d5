#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numeric>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

/// Exact rational over 64-bit integers. Always stored reduced with a
/// positive denominator. Every operation is overflow-checked and throws
/// RationalOverflow rather than wrapping; callers that may exceed the range
/// (the simplex) retry in BigRational.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p/q", "p", and surrounding whitespace; rejects everything else.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational abs(const Rational& value);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Arbitrary-precision rational, used where 64-bit intermediates can overflow.
using BigRational = mpq_class;

BigRational to_big(const Rational& value);
/// Throws RationalOverflow when the value does not fit in 64 bits.
Rational from_big(const BigRational& value);
std::string to_string(const BigRational& value);

}  // namespace hyperwalk

template <>
struct std::hash<hyperwalk::Rational> {
  std::size_t operator()(const hyperwalk::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u ^
           std::hash<std::int64_t>{}(r.den());
  }
};
