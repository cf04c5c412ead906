#include <algorithm>

#include "hopf/enumeration.hpp"
#include "hopf/parse_util.hpp"

#include "algebra_impl.hpp"

namespace hopf::detail {

namespace {

using Composition = std::vector<int>;

Composition parse_composition(std::string_view raw) {
  hopf::detail::Cursor cur(raw);
  cur.expect('(');
  Composition parts;
  if (!cur.try_take(')')) {
    while (true) {
      int part = cur.take_int();
      if (part < 1) cur.fail("composition parts must be positive");
      parts.push_back(part);
      if (cur.try_take(')')) break;
      cur.expect(',');
    }
  }
  cur.expect_eof();
  return parts;
}

std::string composition_key(const Composition& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  out += ")";
  return out;
}

/// Quasi-shuffle: interleavings plus merges of one leading part from each side.
void quasi_shuffle_rec(const Composition& a, std::size_t ia, const Composition& b, std::size_t ib,
                       Composition& acc, Lin& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add(composition_key(acc), Rational(1));
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    quasi_shuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    quasi_shuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    acc.push_back(a[ia] + b[ib]);
    quasi_shuffle_rec(a, ia + 1, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

class QSymAlgebra final : public HopfAlgebra {
 public:
  AlgebraId id() const override { return AlgebraId::QSYM; }
  BasisKey unit() const override { return "()"; }

  BasisKey canonical(std::string_view raw) const override {
    return composition_key(parse_composition(raw));
  }

  int degree(const BasisKey& a) const override {
    int d = 0;
    for (int part : parse_composition(a)) d += part;
    return d;
  }

  std::vector<BasisKey> basis(int degree) const override {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    int cap = algebra_degree_cap(AlgebraId::QSYM);
    if (degree > cap) {
      throw ResourceError("basis at degree " + std::to_string(degree) +
                          " exceeds the configured cap " + std::to_string(cap) + " for QSYM");
    }
    std::vector<BasisKey> out;
    Composition acc;
    build(degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  Lin product(const BasisKey& a, const BasisKey& b) const override {
    Composition ca = parse_composition(a);
    Composition cb = parse_composition(b);
    Composition acc;
    Lin out;
    quasi_shuffle_rec(ca, 0, cb, 0, acc, out);
    return out;
  }

  Pair2 coproduct(const BasisKey& a) const override {
    Composition parts = parse_composition(a);
    Pair2 out;
    for (std::size_t cut = 0; cut <= parts.size(); ++cut) {
      Composition left(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(cut));
      Composition right(parts.begin() + static_cast<std::ptrdiff_t>(cut), parts.end());
      out.add({composition_key(left), composition_key(right)}, Rational(1));
    }
    return out;
  }

  bool expected_commutative() const override { return true; }
  bool expected_cocommutative() const override { return false; }

 private:
  static void build(int remaining, Composition& acc, std::vector<BasisKey>& out) {
    if (remaining == 0) {
      out.push_back(composition_key(acc));
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      acc.push_back(part);
      build(remaining - part, acc, out);
      acc.pop_back();
    }
  }
};

}  // namespace

const HopfAlgebra& qsym_algebra() {
  static QSymAlgebra a;
  return a;
}

}  // namespace hopf::detail
