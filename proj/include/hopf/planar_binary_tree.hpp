#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Planar binary tree: a leaf, or an ordered pair of planar binary trees.
/// Canonical string: "L" for the leaf, "(left right)" with a single space.
/// Degree counts internal nodes.
class PlanarBinaryTree {
 public:
  PlanarBinaryTree() = default;  // leaf
  PlanarBinaryTree(PlanarBinaryTree left, PlanarBinaryTree right);

  static PlanarBinaryTree parse(std::string_view text);

  std::string str() const;
  bool is_leaf() const { return kids_.empty(); }
  int degree() const;

  /// Precondition: !is_leaf().
  const PlanarBinaryTree& left() const { return kids_[0]; }
  const PlanarBinaryTree& right() const { return kids_[1]; }

  /// Irreducible means non-leaf with a leaf right subtree: such trees do not
  /// split under the rightmost-leaf graft below.
  bool is_irreducible() const { return !is_leaf() && kids_[1].is_leaf(); }

  /// Unique factorization into irreducibles under the rightmost-leaf graft.
  /// The leaf factors into the empty list.
  std::vector<PlanarBinaryTree> irreducible_components() const;

  friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
    return a.kids_ == b.kids_;
  }
  friend bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
    return a.str() < b.str();
  }

 private:
  std::vector<PlanarBinaryTree> kids_;  // empty or exactly two
};

/// Replaces the rightmost leaf of x with y. Associative; leaf is the unit.
PlanarBinaryTree pbt_backslash(const PlanarBinaryTree& x, const PlanarBinaryTree& y);

}  // namespace hopf
