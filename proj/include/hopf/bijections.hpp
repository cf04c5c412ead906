#pragma once

#include "hopf/heap_ordered_tree.hpp"
#include "hopf/ordered_tree.hpp"
#include "hopf/permutation.hpp"
#include "hopf/planar_binary_tree.hpp"

namespace hopf {

/// Degree-preserving bijection from planar binary trees to ordered trees.
/// Sends the leaf to the bare root, an irreducible tree to the planted tree
/// over the image of its left subtree, and a rightmost-leaf graft to a root
/// merge, so irreducible factors map to planted components in order.
OrderedTree psi(const PlanarBinaryTree& t);
PlanarBinaryTree psi_inverse(const OrderedTree& t);

/// Degree-preserving bijection from permutations to heap-ordered trees: the
/// i-th value becomes a node labeled w(i), attached as rightmost child of the
/// most recently created node with a smaller label (the root counts as label 0).
/// The inverse reads non-root labels in preorder.
HeapOrderedTree phi(const Permutation& w);
Permutation phi_inverse(const HeapOrderedTree& t);

}  // namespace hopf
