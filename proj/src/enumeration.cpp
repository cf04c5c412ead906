#include "hopf/enumeration.hpp"

#include <algorithm>

namespace hopf {

EnumerationCaps& enumeration_caps() {
  static EnumerationCaps caps;
  return caps;
}

namespace {

void check_degree(int degree, int cap, const char* family) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (degree > cap) {
    throw ResourceError("enumeration at degree " + std::to_string(degree) +
                        " exceeds the configured cap " + std::to_string(cap) + " for " + family);
  }
}

template <class T>
void sort_canonical(std::vector<T>& v) {
  std::sort(v.begin(), v.end(),
            [](const T& a, const T& b) { return a.str() < b.str(); });
}

std::vector<PlanarBinaryTree> pbt_unchecked(int degree) {
  if (degree == 0) return {PlanarBinaryTree()};
  std::vector<PlanarBinaryTree> out;
  for (int l = 0; l < degree; ++l) {
    for (const auto& left : pbt_unchecked(l)) {
      for (const auto& right : pbt_unchecked(degree - 1 - l)) {
        out.emplace_back(left, right);
      }
    }
  }
  return out;
}

/// Ordered trees with the given total node count (>= 1), split on the first
/// child subtree's size so every tree arises exactly once.
std::vector<OrderedTree> ordered_with_nodes(int nodes) {
  if (nodes == 1) return {OrderedTree()};
  std::vector<OrderedTree> out;
  for (int first = 1; first < nodes; ++first) {
    for (const auto& c : ordered_with_nodes(first)) {
      for (const auto& rest : ordered_with_nodes(nodes - first)) {
        std::vector<OrderedTree> kids;
        kids.reserve(rest.children().size() + 1);
        kids.push_back(c);
        kids.insert(kids.end(), rest.children().begin(), rest.children().end());
        out.push_back(OrderedTree(std::move(kids)));
      }
    }
  }
  return out;
}

/// Returns every tree obtained from `node` by prepending a leaf labeled `label`
/// to the child list of exactly one node of `node`.
std::vector<HeapOrderedTree::Node> with_leaf_inserted(const HeapOrderedTree::Node& node,
                                                      int label) {
  std::vector<HeapOrderedTree::Node> out;
  {
    HeapOrderedTree::Node here = node;
    HeapOrderedTree::Node leaf;
    leaf.label = label;
    here.children.insert(here.children.begin(), leaf);
    out.push_back(std::move(here));
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    for (auto& variant : with_leaf_inserted(node.children[i], label)) {
      HeapOrderedTree::Node here = node;
      here.children[i] = std::move(variant);
      out.push_back(std::move(here));
    }
  }
  return out;
}

std::vector<HeapOrderedTree> heap_unchecked(int degree) {
  if (degree == 0) return {HeapOrderedTree()};
  std::vector<HeapOrderedTree> out;
  for (const auto& smaller : heap_unchecked(degree - 1)) {
    for (auto& root : with_leaf_inserted(smaller.root(), degree)) {
      out.push_back(HeapOrderedTree(std::move(root)));
    }
  }
  return out;
}

}  // namespace

EnumKind parse_enum_kind(std::string_view name) {
  if (name == "pbt") return EnumKind::PBT;
  if (name == "ordered") return EnumKind::ORDERED;
  if (name == "heap") return EnumKind::HEAP;
  if (name == "perm") return EnumKind::PERM;
  if (name == "irreducible-pbt") return EnumKind::IRREDUCIBLE_PBT;
  if (name == "planted") return EnumKind::PLANTED;
  if (name == "irreducible-perm") return EnumKind::IRREDUCIBLE_PERM;
  throw std::invalid_argument("unknown enumeration kind: \"" + std::string(name) + "\"");
}

std::string enum_kind_name(EnumKind kind) {
  switch (kind) {
    case EnumKind::PBT: return "pbt";
    case EnumKind::ORDERED: return "ordered";
    case EnumKind::HEAP: return "heap";
    case EnumKind::PERM: return "perm";
    case EnumKind::IRREDUCIBLE_PBT: return "irreducible-pbt";
    case EnumKind::PLANTED: return "planted";
    case EnumKind::IRREDUCIBLE_PERM: return "irreducible-perm";
  }
  throw std::logic_error("unreachable");
}

std::vector<PlanarBinaryTree> enumerate_pbt(int degree) {
  check_degree(degree, enumeration_caps().tree_degree, "planar binary trees");
  auto out = pbt_unchecked(degree);
  sort_canonical(out);
  return out;
}

std::vector<PlanarBinaryTree> enumerate_irreducible_pbt(int degree) {
  auto all = enumerate_pbt(degree);
  std::erase_if(all, [](const PlanarBinaryTree& t) { return !t.is_irreducible(); });
  return all;
}

std::vector<OrderedTree> enumerate_ordered(int degree) {
  check_degree(degree, enumeration_caps().tree_degree, "ordered trees");
  auto out = ordered_with_nodes(degree + 1);
  sort_canonical(out);
  return out;
}

std::vector<OrderedTree> enumerate_planted(int degree) {
  auto all = enumerate_ordered(degree);
  std::erase_if(all, [](const OrderedTree& t) { return t.children().size() != 1; });
  return all;
}

std::vector<HeapOrderedTree> enumerate_heap(int degree) {
  check_degree(degree, enumeration_caps().perm_degree, "heap-ordered trees");
  auto out = heap_unchecked(degree);
  sort_canonical(out);
  return out;
}

std::vector<Permutation> enumerate_perm(int degree) {
  check_degree(degree, enumeration_caps().perm_degree, "permutations");
  std::vector<int> vals(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  do {
    out.push_back(Permutation(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
  sort_canonical(out);
  return out;
}

std::vector<Permutation> enumerate_irreducible_perm(int degree) {
  auto all = enumerate_perm(degree);
  std::erase_if(all, [](const Permutation& w) { return !perm_is_irreducible(w); });
  return all;
}

std::vector<std::string> enumerate_keys(EnumKind kind, int degree) {
  std::vector<std::string> out;
  switch (kind) {
    case EnumKind::PBT:
      for (const auto& t : enumerate_pbt(degree)) out.push_back(t.str());
      break;
    case EnumKind::ORDERED:
      for (const auto& t : enumerate_ordered(degree)) out.push_back(t.str());
      break;
    case EnumKind::HEAP:
      for (const auto& t : enumerate_heap(degree)) out.push_back(t.str());
      break;
    case EnumKind::PERM:
      for (const auto& w : enumerate_perm(degree)) out.push_back(w.str());
      break;
    case EnumKind::IRREDUCIBLE_PBT:
      for (const auto& t : enumerate_irreducible_pbt(degree)) out.push_back(t.str());
      break;
    case EnumKind::PLANTED:
      for (const auto& t : enumerate_planted(degree)) out.push_back(t.str());
      break;
    case EnumKind::IRREDUCIBLE_PERM:
      for (const auto& w : enumerate_irreducible_perm(degree)) out.push_back(w.str());
      break;
  }
  return out;
}

}  // namespace hopf
