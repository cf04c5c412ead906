#include "hopf/ordered_tree.hpp"

#include <map>
#include <stdexcept>

#include "hopf/parse_util.hpp"

namespace hopf {

namespace {

OrderedTree parse_rec(detail::Cursor& cur) {
  cur.expect('(');
  std::vector<OrderedTree> kids;
  while (!cur.try_take(')')) {
    kids.push_back(parse_rec(cur));
  }
  return OrderedTree(std::move(kids));
}

}  // namespace

OrderedTree OrderedTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  OrderedTree t = parse_rec(cur);
  cur.expect_eof();
  return t;
}

std::string OrderedTree::str() const {
  std::string s = "(";
  for (const auto& c : kids_) s += c.str();
  s += ")";
  return s;
}

int OrderedTree::node_count() const {
  int n = 1;
  for (const auto& c : kids_) n += c.node_count();
  return n;
}

std::vector<OrderedTree> ord_planted_components(const OrderedTree& x) {
  std::vector<OrderedTree> out;
  out.reserve(x.children().size());
  for (const auto& c : x.children()) {
    out.push_back(OrderedTree(std::vector<OrderedTree>{c}));
  }
  return out;
}

int ord_component_count(const OrderedTree& x) {
  return static_cast<int>(x.children().size());
}

OrderedTree ord_restrict(const OrderedTree& x, const std::vector<int>& comp_indices) {
  std::vector<OrderedTree> kids;
  kids.reserve(comp_indices.size());
  int prev = -1;
  for (int i : comp_indices) {
    if (i <= prev || i >= ord_component_count(x)) {
      throw std::invalid_argument("component indices must be strictly increasing and in range");
    }
    prev = i;
    kids.push_back(x.children()[static_cast<std::size_t>(i)]);
  }
  return OrderedTree(std::move(kids));
}

OrderedTree ord_backslash(const OrderedTree& x, const OrderedTree& y) {
  std::vector<OrderedTree> kids = x.children();
  kids.insert(kids.end(), y.children().begin(), y.children().end());
  return OrderedTree(std::move(kids));
}

namespace {

OrderedTree attach_rec(const OrderedTree& node,
                       const std::map<int, std::vector<OrderedTree>>& plan, int& next_id) {
  int my_id = next_id++;
  std::vector<OrderedTree> kids;
  if (auto it = plan.find(my_id); it != plan.end()) {
    kids = it->second;
  }
  for (const auto& c : node.children()) {
    kids.push_back(attach_rec(c, plan, next_id));
  }
  return OrderedTree(std::move(kids));
}

}  // namespace

OrderedTree ord_graft(const OrderedTree& x, const OrderedTree& y, const std::vector<int>& f) {
  const auto& comps = x.children();
  if (f.size() != comps.size()) {
    throw std::invalid_argument("attachment map must name one node per component");
  }
  int y_nodes = y.node_count();
  std::map<int, std::vector<OrderedTree>> plan;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= y_nodes) {
      throw std::invalid_argument("attachment target out of range");
    }
    plan[f[i]].push_back(comps[i]);
  }
  int next_id = 0;
  return attach_rec(y, plan, next_id);
}

}  // namespace hopf
