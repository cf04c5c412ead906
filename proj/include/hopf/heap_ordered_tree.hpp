#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Labeled rooted tree with ordered children satisfying three invariants:
///   - labels are exactly 0..n with the root labeled 0,
///   - labels increase strictly from parent to child,
///   - sibling labels decrease strictly left to right.
/// Canonical string writes each node as label "(" children ")" with children
/// separated by single spaces, e.g. "0(2() 1())". Degree counts non-root nodes.
class HeapOrderedTree {
 public:
  struct Node {
    int label = 0;
    std::vector<Node> children;

    friend bool operator==(const Node& a, const Node& b) {
      return a.label == b.label && a.children == b.children;
    }
  };

  HeapOrderedTree() = default;  // bare root labeled 0
  explicit HeapOrderedTree(Node root);  // validates all three invariants

  static HeapOrderedTree parse(std::string_view text);

  std::string str() const;
  int degree() const;
  const Node& root() const { return root_; }

  friend bool operator==(const HeapOrderedTree& a, const HeapOrderedTree& b) {
    return a.root_ == b.root_;
  }
  friend bool operator<(const HeapOrderedTree& a, const HeapOrderedTree& b) {
    return a.str() < b.str();
  }

 private:
  Node root_;
};

/// Components are the child subtrees of the root, left to right, labels as stored.
int hot_component_count(const HeapOrderedTree& x);
const std::vector<HeapOrderedTree::Node>& hot_components(const HeapOrderedTree& x);

/// Tree spanned by the root and the selected components, with non-root labels
/// standardized by rank (smallest surviving label becomes 1). Indices 0-based,
/// strictly increasing, in range.
HeapOrderedTree hot_restrict(const HeapOrderedTree& x, const std::vector<int>& comp_indices);

/// Root merge with relabeling: x's non-root labels are shifted up by degree(y),
/// then x's components precede y's components.
HeapOrderedTree hot_backslash(const HeapOrderedTree& x, const HeapOrderedTree& y);

/// Grafts every component of x, with labels shifted up by degree(y), onto a node
/// of y named by preorder id (root = 0). Grafted subtrees land to the left of the
/// node's own children; components sent to the same node keep their index order.
/// The result is validated against the heap-order invariants.
HeapOrderedTree hot_graft(const HeapOrderedTree& x, const HeapOrderedTree& y,
                           const std::vector<int>& f);

/// Unique factorization under hot_backslash: cuts the component list wherever
/// every label on the left exceeds every label on the right, standardizing each
/// factor. The bare root factors into the empty list.
std::vector<HeapOrderedTree> hot_irreducible_components(const HeapOrderedTree& x);

}  // namespace hopf
