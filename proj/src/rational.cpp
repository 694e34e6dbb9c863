#include "mcvc/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <ostream>

namespace mcvc {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw resource_error("rational overflow: value exceeds 64-bit range after normalization");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::normalized(__int128 num, __int128 den) {
  if (den == 0) throw input_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = normalized(num, den);
}

Rational Rational::from_decimal(const std::string& text) {
  if (text.empty()) throw input_error("empty number");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  __int128 num = 0;
  __int128 den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  int frac_digits = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw input_error("malformed number: " + text);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw input_error("malformed number: " + text);
    }
    any_digit = true;
    num = num * 10 + (c - '0');
    if (seen_dot) {
      den *= 10;
      if (++frac_digits > 18) throw input_error("too many fractional digits: " + text);
    }
    if (num > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) * den) {
      throw input_error("number out of range: " + text);
    }
  }
  if (!any_digit) throw input_error("malformed number: " + text);
  return normalized(negative ? -num : num, den);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return from_decimal(text);
  Rational num = from_decimal(text.substr(0, slash));
  Rational den = from_decimal(text.substr(slash + 1));
  if (den.is_zero()) throw input_error("zero denominator: " + text);
  return num / den;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string() const {
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    throw input_error("rational " + to_string() + " has no finite decimal expansion");
  }
  int digits = twos > fives ? twos : fives;
  __int128 scaled = static_cast<__int128>(num_ < 0 ? -num_ : num_);
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  std::string body;
  if (scaled == 0) body = "0";
  while (scaled > 0) {
    body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
  std::string out = num_ < 0 ? "-" : "";
  if (digits == 0) {
    out += body;
  } else {
    out += body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = normalized(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                     static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = normalized(static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_,
                     static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = normalized(static_cast<__int128>(num_) * rhs.num_,
                     static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw input_error("division by zero rational");
  *this = normalized(static_cast<__int128>(num_) * rhs.den_,
                     static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t ceil_recip(const Rational& x) {
  if (x.num() <= 0) throw input_error("ceil_recip requires a positive argument");
  return (x.den() + x.num() - 1) / x.num();
}

}  // namespace mcvc
