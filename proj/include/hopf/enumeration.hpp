#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/heap_ordered_tree.hpp"
#include "hopf/ordered_tree.hpp"
#include "hopf/permutation.hpp"
#include "hopf/planar_binary_tree.hpp"

namespace hopf {

/// Raised when an enumeration (or a computation that needs one) is asked to go
/// past the configured degree cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide degree caps. Defaults keep exhaustive pairwise suites tractable.
struct EnumerationCaps {
  int tree_degree = 8;  // ordered trees, planar binary trees
  int perm_degree = 7;  // permutations, heap-ordered trees
};

EnumerationCaps& enumeration_caps();

enum class EnumKind {
  PBT,
  ORDERED,
  HEAP,
  PERM,
  IRREDUCIBLE_PBT,
  PLANTED,
  IRREDUCIBLE_PERM,
};

/// Accepts: pbt, ordered, heap, perm, irreducible-pbt, planted, irreducible-perm.
EnumKind parse_enum_kind(std::string_view name);
std::string enum_kind_name(EnumKind kind);

/// All enumerations return complete duplicate-free lists sorted by canonical string.
/// Throws std::invalid_argument for degree < 0 and ResourceError past the cap.
std::vector<PlanarBinaryTree> enumerate_pbt(int degree);
std::vector<PlanarBinaryTree> enumerate_irreducible_pbt(int degree);
std::vector<OrderedTree> enumerate_ordered(int degree);
std::vector<OrderedTree> enumerate_planted(int degree);
std::vector<HeapOrderedTree> enumerate_heap(int degree);
std::vector<Permutation> enumerate_perm(int degree);
std::vector<Permutation> enumerate_irreducible_perm(int degree);

/// Canonical strings of the requested family, sorted.
std::vector<std::string> enumerate_keys(EnumKind kind, int degree);

}  // namespace hopf
