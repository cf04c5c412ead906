#include "hopf/machinery.hpp"

#include <stdexcept>

namespace hopf {

namespace {

TensorComb singletons(const Lin& a) {
  TensorComb out;
  for (const auto& [x, c] : a.terms()) out.add({x}, c);
  return out;
}

/// Splits the first factor of every tuple, keeping only splits where both new
/// factors have positive degree. One application of the reduced coproduct.
TensorComb extend_reduced(const HopfAlgebra& alg, const TensorComb& cur) {
  TensorComb next;
  for (const auto& [tuple, c] : cur.terms()) {
    Pair2 d = alg.coproduct(tuple[0]);
    for (const auto& [p, cd] : d.terms()) {
      if (alg.degree(p.first) == 0 || alg.degree(p.second) == 0) continue;
      std::vector<BasisKey> t;
      t.reserve(tuple.size() + 1);
      t.push_back(p.first);
      t.push_back(p.second);
      t.insert(t.end(), tuple.begin() + 1, tuple.end());
      next.add(std::move(t), c * cd);
    }
  }
  return next;
}

/// All-positive n-fold tensor: (id minus unit-counit)^{tensor n} of the
/// (n-1)-fold coproduct, computed with pruning (exact, the projection kills
/// every pruned term anyway).
TensorComb reduced_tensor(const HopfAlgebra& alg, const Lin& a, int n) {
  TensorComb cur = singletons(project_positive(alg, a));
  for (int len = 2; len <= n && !cur.is_zero(); ++len) {
    cur = extend_reduced(alg, cur);
  }
  return cur;
}

Lin multiply_tuple(const HopfAlgebra& alg, const std::vector<BasisKey>& tuple) {
  Lin acc = Lin::basis(tuple[0]);
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    acc = alg.product(acc, Lin::basis(tuple[i]));
  }
  return acc;
}

Lin multiply_down(const HopfAlgebra& alg, const TensorComb& tensors) {
  Lin out;
  for (const auto& [tuple, c] : tensors.terms()) {
    Lin term = multiply_tuple(alg, tuple);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace

TensorComb iterated_coproduct(const HopfAlgebra& alg, const Lin& a, int n) {
  if (n < 0) throw std::invalid_argument("fold count must be nonnegative");
  TensorComb cur = singletons(a);
  for (int step = 0; step < n; ++step) {
    TensorComb next;
    for (const auto& [tuple, c] : cur.terms()) {
      Pair2 d = alg.coproduct(tuple[0]);
      for (const auto& [p, cd] : d.terms()) {
        std::vector<BasisKey> t;
        t.reserve(tuple.size() + 1);
        t.push_back(p.first);
        t.push_back(p.second);
        t.insert(t.end(), tuple.begin() + 1, tuple.end());
        next.add(std::move(t), c * cd);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TensorComb iterated_coproduct_right(const HopfAlgebra& alg, const Lin& a, int n) {
  if (n < 0) throw std::invalid_argument("fold count must be nonnegative");
  TensorComb cur = singletons(a);
  for (int step = 0; step < n; ++step) {
    TensorComb next;
    for (const auto& [tuple, c] : cur.terms()) {
      Pair2 d = alg.coproduct(tuple.back());
      for (const auto& [p, cd] : d.terms()) {
        std::vector<BasisKey> t(tuple.begin(), tuple.end() - 1);
        t.push_back(p.first);
        t.push_back(p.second);
        next.add(std::move(t), c * cd);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Lin project_positive(const HopfAlgebra& alg, const Lin& a) {
  Lin out;
  for (const auto& [x, c] : a.terms()) {
    if (alg.degree(x) > 0) out.add(x, c);
  }
  return out;
}

Lin conv_power_id_minus_one(const HopfAlgebra& alg, const Lin& a, int n) {
  if (n < 0) throw std::invalid_argument("convolution power must be nonnegative");
  if (n == 0) {
    Lin out;
    out.add(alg.unit(), alg.counit(a));
    return out;
  }
  return multiply_down(alg, reduced_tensor(alg, a, n));
}

Lin conv_power_id_minus_one_unpruned(const HopfAlgebra& alg, const Lin& a, int n) {
  if (n < 0) throw std::invalid_argument("convolution power must be nonnegative");
  if (n == 0) {
    Lin out;
    out.add(alg.unit(), alg.counit(a));
    return out;
  }
  TensorComb raw = iterated_coproduct(alg, a, n - 1);
  Lin out;
  for (const auto& [tuple, c] : raw.terms()) {
    bool killed = false;
    for (const auto& x : tuple) {
      if (alg.degree(x) == 0) {
        killed = true;
        break;
      }
    }
    if (killed) continue;
    Lin term = multiply_tuple(alg, tuple);
    term *= c;
    out += term;
  }
  return out;
}

int coradical_level(const HopfAlgebra& alg, const Lin& a) {
  TensorComb cur = singletons(project_positive(alg, a));
  int k = 0;
  while (!cur.is_zero()) {
    ++k;
    cur = extend_reduced(alg, cur);
  }
  return k;
}

bool is_primitive(const HopfAlgebra& alg, const Lin& a) {
  Pair2 expected = tensor2(alg.unit_lin(), a) + tensor2(a, alg.unit_lin());
  return alg.coproduct(a) == expected;
}

Lin antipode(const HopfAlgebra& alg, const Lin& a) {
  int top = alg.max_degree(a);
  Lin out;
  for (int n = 0; n <= top; ++n) {
    Lin term = conv_power_id_minus_one(alg, a, n);
    if (n % 2 == 1) term *= Rational(-1);
    out += term;
  }
  return out;
}

Lin eulerian(const HopfAlgebra& alg, const Lin& a) {
  int top = alg.max_degree(a);
  Lin out;
  for (int n = 1; n <= top; ++n) {
    Lin term = conv_power_id_minus_one(alg, a, n);
    Rational coeff = Rational(1) / Rational(n);
    if (n % 2 == 0) coeff = -coeff;
    term *= coeff;
    out += term;
  }
  return out;
}

}  // namespace hopf
