#include "hyperwalk/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <ostream>

namespace hyperwalk {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw RationalOverflow();
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw RationalOverflow();
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow();
  return -a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  // std::gcd on INT64_MIN is undefined; both operands are checked upstream.
  return std::gcd(a, b);
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "InternalError";
  }
  return "InternalError";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    throw RationalOverflow();
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = gcd64(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("not a rational: '" + std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = checked_neg(num_);
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.num_ == 0) return *this;
  if (num_ == 0) return *this = rhs;
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked_add(num_, rhs.num_);
    return *this;
  }
  // Knuth 4.5.1: keep intermediates small by splitting off gcd(den, rhs.den).
  const std::int64_t g = gcd64(den_, rhs.den_);
  if (g == 1) {
    num_ = checked_add(checked_mul(num_, rhs.den_), checked_mul(rhs.num_, den_));
    den_ = checked_mul(den_, rhs.den_);
    return *this;
  }
  const std::int64_t t = checked_add(checked_mul(num_, rhs.den_ / g),
                                     checked_mul(rhs.num_, den_ / g));
  const std::int64_t g2 = gcd64(t, g);
  num_ = t / g2;
  den_ = checked_mul(den_ / g, rhs.den_ / g2);
  if (num_ == 0) den_ = 1;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (num_ == 0 || rhs.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  const std::int64_t g1 = gcd64(num_, rhs.den_);
  const std::int64_t g2 = gcd64(rhs.num_, den_);
  num_ = checked_mul(num_ / g1, rhs.num_ / g2);
  den_ = checked_mul(den_ / g2, rhs.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("rational division by zero");
  Rational inv;
  inv.num_ = rhs.den_;
  inv.den_ = rhs.num_;
  if (inv.den_ < 0) {
    inv.num_ = checked_neg(inv.num_);
    inv.den_ = checked_neg(inv.den_);
  }
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  const __int128 a = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 b = static_cast<__int128>(rhs.num_) * lhs.den_;
  return a < b ? std::strong_ordering::less
               : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigRational to_big(const Rational& value) {
  BigRational out;
  mpz_set_si(out.get_num_mpz_t(), value.num());
  mpz_set_si(out.get_den_mpz_t(), value.den());
  return out;
}

Rational from_big(const BigRational& value) {
  if (!mpz_fits_slong_p(value.get_num_mpz_t()) || !mpz_fits_slong_p(value.get_den_mpz_t())) {
    throw RationalOverflow();
  }
  return Rational(mpz_get_si(value.get_num_mpz_t()), mpz_get_si(value.get_den_mpz_t()));
}

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace hyperwalk
