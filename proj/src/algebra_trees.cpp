#include "hopf/bijections.hpp"
#include "hopf/enumeration.hpp"
#include "hopf/heap_ordered_tree.hpp"
#include "hopf/ordered_tree.hpp"

#include "algebra_impl.hpp"

namespace hopf::detail {

namespace {

/// Iterates f over nodes(y)^k in lexicographic node order. Calls visit(f).
template <class Visit>
void for_each_attachment(int k, int node_count, Visit&& visit) {
  std::vector<int> f(static_cast<std::size_t>(k), 0);
  while (true) {
    visit(f);
    int i = k - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == node_count - 1) {
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++f[static_cast<std::size_t>(i)];
  }
}

/// Complement-split subsets: calls visit(S, Sc) for every subset of {0..k-1}.
template <class Visit>
void for_each_subset(int k, Visit&& visit) {
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> s, sc;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        s.push_back(i);
      } else {
        sc.push_back(i);
      }
    }
    visit(s, sc);
  }
}

class HOAlgebra final : public HopfAlgebra {
 public:
  AlgebraId id() const override { return AlgebraId::HO; }
  BasisKey unit() const override { return "()"; }

  BasisKey canonical(std::string_view raw) const override {
    return OrderedTree::parse(raw).str();
  }

  int degree(const BasisKey& a) const override { return OrderedTree::parse(a).degree(); }

  std::vector<BasisKey> basis(int degree) const override {
    return enumerate_keys(EnumKind::ORDERED, degree);
  }

  Lin product(const BasisKey& a, const BasisKey& b) const override {
    OrderedTree x = OrderedTree::parse(a);
    OrderedTree y = OrderedTree::parse(b);
    int k = ord_component_count(x);
    Lin out;
    for_each_attachment(k, y.node_count(), [&](const std::vector<int>& f) {
      out.add(ord_graft(x, y, f).str(), Rational(1));
    });
    return out;
  }

  Pair2 coproduct(const BasisKey& a) const override {
    OrderedTree x = OrderedTree::parse(a);
    Pair2 out;
    for_each_subset(ord_component_count(x), [&](const std::vector<int>& s,
                                                const std::vector<int>& sc) {
      out.add({ord_restrict(x, s).str(), ord_restrict(x, sc).str()}, Rational(1));
    });
    return out;
  }

  bool expected_commutative() const override { return false; }
  bool expected_cocommutative() const override { return true; }
};

class HHOAlgebra final : public HopfAlgebra {
 public:
  AlgebraId id() const override { return AlgebraId::HHO; }
  BasisKey unit() const override { return "0()"; }

  BasisKey canonical(std::string_view raw) const override {
    return HeapOrderedTree::parse(raw).str();
  }

  int degree(const BasisKey& a) const override { return HeapOrderedTree::parse(a).degree(); }

  std::vector<BasisKey> basis(int degree) const override {
    return enumerate_keys(EnumKind::HEAP, degree);
  }

  Lin product(const BasisKey& a, const BasisKey& b) const override {
    HeapOrderedTree x = HeapOrderedTree::parse(a);
    HeapOrderedTree y = HeapOrderedTree::parse(b);
    int k = hot_component_count(x);
    Lin out;
    for_each_attachment(k, y.degree() + 1, [&](const std::vector<int>& f) {
      out.add(hot_graft(x, y, f).str(), Rational(1));
    });
    return out;
  }

  Pair2 coproduct(const BasisKey& a) const override {
    HeapOrderedTree x = HeapOrderedTree::parse(a);
    Pair2 out;
    for_each_subset(hot_component_count(x), [&](const std::vector<int>& s,
                                                const std::vector<int>& sc) {
      out.add({hot_restrict(x, s).str(), hot_restrict(x, sc).str()}, Rational(1));
    });
    return out;
  }

  bool expected_commutative() const override { return false; }
  bool expected_cocommutative() const override { return true; }
};

}  // namespace

const HopfAlgebra& ho_algebra() {
  static HOAlgebra a;
  return a;
}

const HopfAlgebra& hho_algebra() {
  static HHOAlgebra a;
  return a;
}

}  // namespace hopf::detail
