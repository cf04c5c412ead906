#include "hopf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hopf {

namespace {

bool is_valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    v_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Rational Rational::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_valid_integer(text)) {
      throw std::invalid_argument("invalid rational: \"" + std::string(text) + "\"");
    }
    Rational r;
    r.v_ = boost::multiprecision::cpp_rational(BigInt(std::string(text)));
    return r;
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_valid_integer(num) || !is_valid_integer(den) || den[0] == '-') {
    throw std::invalid_argument("invalid rational: \"" + std::string(text) + "\"");
  }
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("invalid rational: \"" + std::string(text) + "\"");
  return Rational(BigInt(std::string(num)), d);
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hopf
