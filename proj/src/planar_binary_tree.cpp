#include "hopf/planar_binary_tree.hpp"

#include "hopf/parse_util.hpp"

namespace hopf {

PlanarBinaryTree::PlanarBinaryTree(PlanarBinaryTree left, PlanarBinaryTree right) {
  kids_.reserve(2);
  kids_.push_back(std::move(left));
  kids_.push_back(std::move(right));
}

namespace {

PlanarBinaryTree parse_rec(detail::Cursor& cur) {
  if (cur.try_take('L')) return PlanarBinaryTree();
  cur.expect('(');
  PlanarBinaryTree l = parse_rec(cur);
  cur.expect(' ');
  PlanarBinaryTree r = parse_rec(cur);
  cur.expect(')');
  return PlanarBinaryTree(std::move(l), std::move(r));
}

}  // namespace

PlanarBinaryTree PlanarBinaryTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  PlanarBinaryTree t = parse_rec(cur);
  cur.expect_eof();
  return t;
}

std::string PlanarBinaryTree::str() const {
  if (is_leaf()) return "L";
  return "(" + kids_[0].str() + " " + kids_[1].str() + ")";
}

int PlanarBinaryTree::degree() const {
  if (is_leaf()) return 0;
  return 1 + kids_[0].degree() + kids_[1].degree();
}

std::vector<PlanarBinaryTree> PlanarBinaryTree::irreducible_components() const {
  std::vector<PlanarBinaryTree> out;
  const PlanarBinaryTree* t = this;
  while (!t->is_leaf()) {
    out.emplace_back(t->left(), PlanarBinaryTree());
    t = &t->right();
  }
  return out;
}

PlanarBinaryTree pbt_backslash(const PlanarBinaryTree& x, const PlanarBinaryTree& y) {
  if (x.is_leaf()) return y;
  return PlanarBinaryTree(x.left(), pbt_backslash(x.right(), y));
}

}  // namespace hopf
