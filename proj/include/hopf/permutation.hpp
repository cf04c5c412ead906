#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Permutation of {1..n} in one-line notation. Canonical string is the digit
/// word for n <= 9 ("231") and comma-separated values otherwise ("10,2,...").
/// Degree is n.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation, degree 0
  explicit Permutation(std::vector<int> one_line);  // validates a bijection on 1..n

  static Permutation parse(std::string_view text);

  std::string str() const;
  int degree() const { return static_cast<int>(vals_.size()); }
  const std::vector<int>& values() const { return vals_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.vals_ == b.vals_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.str() < b.str();
  }

 private:
  std::vector<int> vals_;
};

/// 1-based positions p with every value among the first p exceeding every value
/// after; equivalently the cut points of the factorization below.
std::vector<int> perm_global_descents(const Permutation& w);

bool perm_is_irreducible(const Permutation& w);

/// u \ v: the values of u shifted up by degree(v), followed by the values of v.
Permutation perm_backslash(const Permutation& u, const Permutation& v);

/// Unique factorization under perm_backslash into irreducibles, each factor
/// standardized. The empty permutation factors into the empty list.
std::vector<Permutation> perm_irreducible_components(const Permutation& w);

/// Values replaced by their ranks (smallest value becomes 1).
Permutation perm_standardize(const std::vector<int>& values);

}  // namespace hopf
