#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace fermicat {

// Exact rational scalar on int64 numerator/denominator. All intermediate
// products run through __int128 and narrowing back to int64 is checked, so
// overflow raises std::overflow_error instead of corrupting a computation.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  static std::int64_t narrow(__int128 value);
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace fermicat

namespace Eigen {

template <>
struct NumTraits<fermicat::Rational> : GenericNumTraits<fermicat::Rational> {
  typedef fermicat::Rational Real;
  typedef fermicat::Rational NonInteger;
  typedef fermicat::Rational Nested;
  typedef fermicat::Rational Literal;

  static inline Real epsilon() { return fermicat::Rational(0); }
  static inline Real dummy_precision() { return fermicat::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 12,
    MulCost = 12,
  };
};

}  // namespace Eigen
