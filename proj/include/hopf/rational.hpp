#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, integers are scalars
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with optional leading '-' on p; q must be positive.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Division by zero throws std::domain_error.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace hopf
