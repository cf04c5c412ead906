#include "hopf/bijections.hpp"

namespace hopf {

OrderedTree psi(const PlanarBinaryTree& t) {
  if (t.is_leaf()) return OrderedTree();
  std::vector<OrderedTree> kids;
  for (const auto& f : t.irreducible_components()) {
    kids.push_back(psi(f.left()));
  }
  return OrderedTree(std::move(kids));
}

PlanarBinaryTree psi_inverse(const OrderedTree& t) {
  PlanarBinaryTree acc;
  for (const auto& c : t.children()) {
    acc = pbt_backslash(acc, PlanarBinaryTree(psi_inverse(c), PlanarBinaryTree()));
  }
  return acc;
}

namespace {

HeapOrderedTree::Node build_phi_node(int step, const std::vector<int>& val,
                                     const std::vector<std::vector<int>>& children) {
  HeapOrderedTree::Node n;
  n.label = val[static_cast<std::size_t>(step)];
  for (int c : children[static_cast<std::size_t>(step)]) {
    n.children.push_back(build_phi_node(c, val, children));
  }
  return n;
}

void preorder_labels(const HeapOrderedTree::Node& n, std::vector<int>& out) {
  if (n.label != 0) out.push_back(n.label);
  for (const auto& c : n.children) preorder_labels(c, out);
}

}  // namespace

HeapOrderedTree phi(const Permutation& w) {
  int n = w.degree();
  std::vector<int> val(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    val[static_cast<std::size_t>(i)] = w.values()[static_cast<std::size_t>(i) - 1];
  }
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    int j = i - 1;
    while (val[static_cast<std::size_t>(j)] > val[static_cast<std::size_t>(i)]) --j;
    children[static_cast<std::size_t>(j)].push_back(i);
  }
  return HeapOrderedTree(build_phi_node(0, val, children));
}

Permutation phi_inverse(const HeapOrderedTree& t) {
  std::vector<int> vals;
  preorder_labels(t.root(), vals);
  return Permutation(std::move(vals));
}

}  // namespace hopf
