#include "hopf/heap_ordered_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hopf/parse_util.hpp"

namespace hopf {

namespace {

using Node = HeapOrderedTree::Node;

void collect_labels(const Node& n, std::vector<int>& out) {
  out.push_back(n.label);
  for (const auto& c : n.children) collect_labels(c, out);
}

void validate_rec(const Node& n) {
  int prev = -1;
  for (const auto& c : n.children) {
    if (c.label <= n.label) {
      throw std::invalid_argument("child label must exceed parent label");
    }
    if (prev != -1 && c.label >= prev) {
      throw std::invalid_argument("children labels must decrease left to right");
    }
    prev = c.label;
    validate_rec(c);
  }
}

void validate(const Node& root) {
  if (root.label != 0) throw std::invalid_argument("root label must be 0");
  std::vector<int> labels;
  collect_labels(root, labels);
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<int>(i)) {
      throw std::invalid_argument("labels must be exactly 0..n without repeats");
    }
  }
  validate_rec(root);
}

Node parse_rec(detail::Cursor& cur) {
  Node n;
  n.label = cur.take_int();
  cur.expect('(');
  bool first = true;
  while (!cur.try_take(')')) {
    if (!first) cur.expect(' ');
    first = false;
    n.children.push_back(parse_rec(cur));
  }
  return n;
}

void str_rec(const Node& n, std::string& out) {
  out += std::to_string(n.label);
  out += "(";
  bool first = true;
  for (const auto& c : n.children) {
    if (!first) out += " ";
    first = false;
    str_rec(c, out);
  }
  out += ")";
}

int count_rec(const Node& n) {
  int k = 1;
  for (const auto& c : n.children) k += count_rec(c);
  return k;
}

Node shift_labels(const Node& n, int delta) {
  Node out;
  out.label = n.label + delta;
  out.children.reserve(n.children.size());
  for (const auto& c : n.children) out.children.push_back(shift_labels(c, delta));
  return out;
}

Node relabel(const Node& n, const std::map<int, int>& to_rank) {
  Node out;
  out.label = to_rank.at(n.label);
  out.children.reserve(n.children.size());
  for (const auto& c : n.children) out.children.push_back(relabel(c, to_rank));
  return out;
}

/// Root 0 over the given component subtrees, standardizing non-root labels by rank.
HeapOrderedTree assemble_standardized(const std::vector<Node>& comps) {
  std::vector<int> labels;
  for (const auto& c : comps) collect_labels(c, labels);
  std::sort(labels.begin(), labels.end());
  std::map<int, int> to_rank;
  for (std::size_t i = 0; i < labels.size(); ++i) to_rank[labels[i]] = static_cast<int>(i) + 1;
  Node root;
  root.children.reserve(comps.size());
  for (const auto& c : comps) root.children.push_back(relabel(c, to_rank));
  return HeapOrderedTree(std::move(root));
}

}  // namespace

HeapOrderedTree::HeapOrderedTree(Node root) : root_(std::move(root)) { validate(root_); }

HeapOrderedTree HeapOrderedTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  Node root = parse_rec(cur);
  cur.expect_eof();
  return HeapOrderedTree(std::move(root));
}

std::string HeapOrderedTree::str() const {
  std::string out;
  str_rec(root_, out);
  return out;
}

int HeapOrderedTree::degree() const { return count_rec(root_) - 1; }

int hot_component_count(const HeapOrderedTree& x) {
  return static_cast<int>(x.root().children.size());
}

const std::vector<Node>& hot_components(const HeapOrderedTree& x) { return x.root().children; }

HeapOrderedTree hot_restrict(const HeapOrderedTree& x, const std::vector<int>& comp_indices) {
  const auto& comps = x.root().children;
  std::vector<Node> picked;
  picked.reserve(comp_indices.size());
  int prev = -1;
  for (int i : comp_indices) {
    if (i <= prev || i >= static_cast<int>(comps.size())) {
      throw std::invalid_argument("component indices must be strictly increasing and in range");
    }
    prev = i;
    picked.push_back(comps[static_cast<std::size_t>(i)]);
  }
  return assemble_standardized(picked);
}

HeapOrderedTree hot_backslash(const HeapOrderedTree& x, const HeapOrderedTree& y) {
  int dy = y.degree();
  std::vector<Node> comps;
  comps.reserve(x.root().children.size() + y.root().children.size());
  for (const auto& c : x.root().children) comps.push_back(shift_labels(c, dy));
  for (const auto& c : y.root().children) comps.push_back(c);
  Node root;
  root.children = std::move(comps);
  return HeapOrderedTree(std::move(root));
}

namespace {

Node attach_rec(const Node& node, const std::map<int, std::vector<Node>>& plan, int& next_id) {
  int my_id = next_id++;
  Node out;
  out.label = node.label;
  if (auto it = plan.find(my_id); it != plan.end()) {
    out.children = it->second;
  }
  for (const auto& c : node.children) {
    out.children.push_back(attach_rec(c, plan, next_id));
  }
  return out;
}

}  // namespace

HeapOrderedTree hot_graft(const HeapOrderedTree& x, const HeapOrderedTree& y,
                           const std::vector<int>& f) {
  const auto& comps = x.root().children;
  if (f.size() != comps.size()) {
    throw std::invalid_argument("attachment map must name one node per component");
  }
  int dy = y.degree();
  int y_nodes = dy + 1;
  std::map<int, std::vector<Node>> plan;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= y_nodes) {
      throw std::invalid_argument("attachment target out of range");
    }
    plan[f[i]].push_back(shift_labels(comps[i], dy));
  }
  int next_id = 0;
  Node root = attach_rec(y.root(), plan, next_id);
  return HeapOrderedTree(std::move(root));
}

std::vector<HeapOrderedTree> hot_irreducible_components(const HeapOrderedTree& x) {
  const auto& comps = x.root().children;
  std::size_t k = comps.size();
  std::vector<int> comp_min(k), comp_max(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> labels;
    collect_labels(comps[i], labels);
    comp_min[i] = *std::min_element(labels.begin(), labels.end());
    comp_max[i] = *std::max_element(labels.begin(), labels.end());
  }
  std::vector<HeapOrderedTree> out;
  std::size_t start = 0;
  int prefix_min = 0;
  for (std::size_t i = 0; i < k; ++i) {
    prefix_min = (i == start) ? comp_min[i] : std::min(prefix_min, comp_min[i]);
    int suffix_max = 0;
    for (std::size_t j = i + 1; j < k; ++j) suffix_max = std::max(suffix_max, comp_max[j]);
    if (i + 1 == k || prefix_min > suffix_max) {
      std::vector<Node> segment(comps.begin() + static_cast<std::ptrdiff_t>(start),
                                comps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      out.push_back(assemble_standardized(segment));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace hopf
