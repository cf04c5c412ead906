#include "hopf/permutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hopf/parse_util.hpp"

namespace hopf {

namespace {

void validate(const std::vector<int>& vals) {
  std::vector<bool> seen(vals.size() + 1, false);
  for (int v : vals) {
    if (v < 1 || v > static_cast<int>(vals.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("values must be a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
  validate(vals_);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  if (text.find(',') != std::string_view::npos) {
    detail::Cursor cur(text);
    vals.push_back(cur.take_int());
    while (cur.try_take(',')) vals.push_back(cur.take_int());
    cur.expect_eof();
  } else {
    detail::Cursor cur(text);
    while (!cur.eof()) {
      char c = cur.peek();
      if (c < '1' || c > '9') cur.fail("expected digit 1-9");
      vals.push_back(c - '0');
      cur.take();
    }
  }
  return Permutation(std::move(vals));
}

std::string Permutation::str() const {
  std::string out;
  bool digits = degree() <= 9;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (!digits && i > 0) out += ",";
    out += std::to_string(vals_[i]);
  }
  return out;
}

std::vector<int> perm_global_descents(const Permutation& w) {
  const auto& v = w.values();
  int n = w.degree();
  std::vector<int> out;
  if (n == 0) return out;
  std::vector<int> suffix_max(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_max[static_cast<std::size_t>(i)] =
        std::max(v[static_cast<std::size_t>(i)], suffix_max[static_cast<std::size_t>(i) + 1]);
  }
  int prefix_min = v[0];
  for (int p = 1; p < n; ++p) {
    prefix_min = std::min(prefix_min, v[static_cast<std::size_t>(p) - 1]);
    if (prefix_min > suffix_max[static_cast<std::size_t>(p)]) out.push_back(p);
  }
  return out;
}

bool perm_is_irreducible(const Permutation& w) {
  return w.degree() > 0 && perm_global_descents(w).empty();
}

Permutation perm_backslash(const Permutation& u, const Permutation& v) {
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(u.degree() + v.degree()));
  for (int x : u.values()) vals.push_back(x + v.degree());
  for (int x : v.values()) vals.push_back(x);
  return Permutation(std::move(vals));
}

std::vector<Permutation> perm_irreducible_components(const Permutation& w) {
  const auto& v = w.values();
  std::vector<Permutation> out;
  if (w.degree() == 0) return out;
  std::vector<int> cuts = perm_global_descents(w);
  cuts.push_back(w.degree());
  int start = 0;
  for (int cut : cuts) {
    std::vector<int> segment(v.begin() + start, v.begin() + cut);
    out.push_back(perm_standardize(segment));
    start = cut;
  }
  return out;
}

Permutation perm_standardize(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> rank;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
  if (rank.size() != values.size()) {
    throw std::invalid_argument("values must be distinct");
  }
  std::vector<int> out;
  out.reserve(values.size());
  for (int x : values) out.push_back(rank.at(x));
  return Permutation(std::move(out));
}

}  // namespace hopf
