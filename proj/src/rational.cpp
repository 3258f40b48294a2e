#include "fermicat/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fermicat {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::int64_t Rational::narrow(__int128 value) {
  if (value > static_cast<__int128>(INT64_MAX) || value < static_cast<__int128>(INT64_MIN)) {
    throw std::overflow_error("rational arithmetic overflowed 64-bit storage");
  }
  return static_cast<std::int64_t>(value);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) {
    return Rational(0);
  }
  const __int128 g = wide_gcd(numerator, denominator);
  Rational out;
  out.num_ = narrow(numerator / g);
  out.den_ = narrow(denominator / g);
  return out;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = narrow(-static_cast<__int128>(num_));
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
  const __int128 d = static_cast<__int128>(den_) * rhs.den_;
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  const __int128 n = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
  const __int128 d = static_cast<__int128>(den_) * rhs.den_;
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  const __int128 n = static_cast<__int128>(num_) * rhs.num_;
  const __int128 d = static_cast<__int128>(den_) * rhs.den_;
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw std::invalid_argument("rational division by zero");
  }
  const __int128 n = static_cast<__int128>(num_) * rhs.den_;
  const __int128 d = static_cast<__int128>(den_) * rhs.num_;
  *this = from_wide(n, d);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const __int128 left = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 right = static_cast<__int128>(rhs.num_) * lhs.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& value) {
  return value < Rational(0) ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace fermicat
