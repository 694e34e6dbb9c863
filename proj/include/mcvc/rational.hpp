#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mcvc/errors.hpp"

namespace mcvc {

// Exact rational with 64-bit numerator/denominator. Always normalized:
// gcd(|num|, den) == 1 and den > 0. Intermediate products run in 128 bits
// and overflow of the normalized result throws resource_error, so values
// never silently degrade to floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  // Parses "3", "-3", "2.9", ".5" (up to 18 fractional digits).
  static Rational from_decimal(const std::string& text);
  // Accepts decimals and "a/b" fractions.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "7" or "7/2"
  // Exact decimal expansion; throws input_error if den has prime factors
  // other than 2 and 5.
  std::string to_decimal_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational normalized(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Smallest integer >= 1/x; requires x > 0. Used for t = ceil(1/eps).
std::int64_t ceil_recip(const Rational& x);

}  // namespace mcvc
