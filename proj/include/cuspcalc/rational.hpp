#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "cuspcalc/error.hpp"

namespace cuspcalc {

/// Exact rational number over 64-bit integers, kept in lowest terms with a
/// positive denominator. All arithmetic in the library is exact; nothing is
/// ever rounded to floating point.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw calc_error(errc::domain_error, "zero denominator");
    normalize();
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  /// True for elements of (1/2)Z: integers and odd multiples of 1/2.
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }

  /// Representative of this value modulo 1/2 lying in [0, 1/2).
  Rational mod_half() const {
    // this - floor(2*this)/2
    long long two_num = 2 * num_;
    long long q = floor_div(two_num, den_);
    return *this - Rational(q, 2);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// Lowest-terms text form: "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q" with an optional leading sign on p. Anything else
  /// is rejected.
  static Rational parse(std::string_view s);

 private:
  long long num_;
  long long den_;

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
};

inline Rational Rational::parse(std::string_view s) {
  auto fail = [&] {
    throw calc_error(errc::parse_error, "bad rational '" + std::string(s) + "'");
  };
  if (s.empty()) fail();
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
  long long num = 0;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) num = num * 10 + (s[i] - '0');
  long long den = 1;
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
    den = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) den = den * 10 + (s[i] - '0');
    if (i != s.size()) fail();
    if (den == 0) fail();
  }
  return Rational(neg ? -num : num, den);
}

}  // namespace cuspcalc
