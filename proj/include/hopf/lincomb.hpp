#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Formal linear combination of basis objects B with exact rational coefficients.
/// Zero coefficients are never stored, so operator== is structural equality of values.
/// B must be totally ordered by operator< (the canonical order of its basis strings).
template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;

  static LinComb zero() { return LinComb(); }

  static LinComb basis(B b, Rational c = Rational(1)) {
    LinComb r;
    r.add(std::move(b), std::move(c));
    return r;
  }

  void add(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(B&& b, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }

  LinComb& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Element of a two-fold tensor power, expressed on pairs of basis objects.
template <class B>
using PairComb = LinComb<std::pair<B, B>>;

/// Outer product: (sum a_i x_i) tensor (sum b_j y_j) = sum a_i b_j (x_i, y_j).
template <class B>
PairComb<B> tensor2(const LinComb<B>& a, const LinComb<B>& b) {
  PairComb<B> r;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      r.add(std::make_pair(x, y), cx * cy);
    }
  }
  return r;
}

/// Flip of the two tensor factors.
template <class B>
PairComb<B> swap_sides(const PairComb<B>& a) {
  PairComb<B> r;
  for (const auto& [p, c] : a.terms()) r.add(std::make_pair(p.second, p.first), c);
  return r;
}

/// Linear extension of a map defined on basis objects. f(b) must return a LinComb.
template <class B, class F>
auto extend_linearly(const LinComb<B>& a, F&& f) -> decltype(f(std::declval<const B&>())) {
  decltype(f(std::declval<const B&>())) r;
  for (const auto& [b, c] : a.terms()) {
    auto image = f(b);
    image *= c;
    r += image;
  }
  return r;
}

/// Bilinear extension of a map defined on pairs of basis objects.
template <class B, class F>
auto extend_bilinearly(const PairComb<B>& a, F&& f)
    -> decltype(f(std::declval<const B&>(), std::declval<const B&>())) {
  decltype(f(std::declval<const B&>(), std::declval<const B&>())) r;
  for (const auto& [p, c] : a.terms()) {
    auto image = f(p.first, p.second);
    image *= c;
    r += image;
  }
  return r;
}

}  // namespace hopf
