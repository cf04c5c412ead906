#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Rooted tree whose children carry a left-to-right order. Canonical string
/// writes each node as "(" followed by its child subtrees followed by ")",
/// so "()" is the bare root and "(()())" a root with two leaf children.
/// Degree counts non-root nodes.
class OrderedTree {
 public:
  OrderedTree() = default;  // bare root
  explicit OrderedTree(std::vector<OrderedTree> children) : kids_(std::move(children)) {}

  static OrderedTree parse(std::string_view text);

  std::string str() const;
  int node_count() const;
  int degree() const { return node_count() - 1; }

  const std::vector<OrderedTree>& children() const { return kids_; }

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) {
    return a.kids_ == b.kids_;
  }
  friend bool operator<(const OrderedTree& a, const OrderedTree& b) {
    return a.str() < b.str();
  }

 private:
  std::vector<OrderedTree> kids_;
};

/// Planted components: the i-th is a root carrying only the i-th child subtree.
/// These are exactly the irreducible elements under ord_backslash.
std::vector<OrderedTree> ord_planted_components(const OrderedTree& x);
int ord_component_count(const OrderedTree& x);

/// Tree spanned by the root and the selected components. Indices are 0-based,
/// strictly increasing, and in range.
OrderedTree ord_restrict(const OrderedTree& x, const std::vector<int>& comp_indices);

/// Root merge: the children of x followed by the children of y.
OrderedTree ord_backslash(const OrderedTree& x, const OrderedTree& y);

/// Grafts every component of x onto a node of y. f has one entry per component
/// of x, naming a node of y by preorder id (root = 0). Grafted subtrees land to
/// the left of y's own children; components sent to the same node keep their
/// index order left to right.
OrderedTree ord_graft(const OrderedTree& x, const OrderedTree& y, const std::vector<int>& f);

}  // namespace hopf
