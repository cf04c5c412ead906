#include "hopf/isomorphisms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hopf/bijections.hpp"
#include "hopf/enumeration.hpp"
#include "hopf/heap_ordered_tree.hpp"
#include "hopf/machinery.hpp"
#include "hopf/ordered_tree.hpp"
#include "hopf/permutation.hpp"
#include "hopf/planar_binary_tree.hpp"
#include "hopf/word.hpp"

namespace hopf {
namespace {

constexpr std::size_t kMaxFailures = 5;

const Alphabet& iso_alphabet(IsoKind kind) {
  return kind == IsoKind::PSI ? irreducible_pbt_alphabet()
                              : irreducible_perm_alphabet();
}

/// Image of a single word letter, memoized per isomorphism.
const Lin& letter_image(IsoKind kind, const std::string& letter) {
  static std::map<std::pair<int, std::string>, Lin> cache;
  const auto key = std::make_pair(static_cast<int>(kind), letter);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Lin image;
  if (kind == IsoKind::PSI) {
    image = Lin::basis(psi(PlanarBinaryTree::parse(letter)).str());
  } else {
    const Lin base = Lin::basis(phi(Permutation::parse(letter)).str());
    image = eulerian(iso_target(kind), base);
  }
  return cache.emplace(key, std::move(image)).first->second;
}

const Lin& word_image(IsoKind kind, const BasisKey& word) {
  static std::map<std::pair<int, std::string>, Lin> cache;
  const auto key = std::make_pair(static_cast<int>(kind), word);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const HopfAlgebra& target = iso_target(kind);
  const Alphabet& alphabet = iso_alphabet(kind);
  Lin acc = target.unit_lin();
  for (const auto& letter : word_letters(word))
    acc = target.product(acc, letter_image(kind, alphabet.canonical_letter(letter)));
  return cache.emplace(key, std::move(acc)).first->second;
}

struct OrderedKey {
  std::pair<int, int> order;
  BasisKey key;

  bool operator<(const OrderedKey& other) const {
    if (order != other.order) return order_less(order, other.order);
    return key < other.key;
  }
};

void record_failure(DegreeCertificate& cert, const std::string& message) {
  if (cert.failures.size() < kMaxFailures) cert.failures.push_back(message);
}

const DegreeCertificate& cached_certificate(IsoKind kind, int degree) {
  static std::map<std::pair<int, int>, DegreeCertificate> cache;
  const auto key = std::make_pair(static_cast<int>(kind), degree);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, triangularity_certificate(kind, degree)).first;
  return it->second;
}

}  // namespace

IsoKind parse_iso_kind(std::string_view text) {
  if (text == "psi") return IsoKind::PSI;
  if (text == "phi") return IsoKind::PHI;
  throw std::invalid_argument("unknown isomorphism: " + std::string(text));
}

std::string iso_kind_name(IsoKind kind) {
  return kind == IsoKind::PSI ? "psi" : "phi";
}

const HopfAlgebra& iso_source(IsoKind kind) {
  return algebra(kind == IsoKind::PSI ? AlgebraId::GR_YSYM_DUAL
                                      : AlgebraId::GR_SSYM_DUAL);
}

const HopfAlgebra& iso_target(IsoKind kind) {
  return algebra(kind == IsoKind::PSI ? AlgebraId::HO : AlgebraId::HHO);
}

std::pair<int, int> target_order_pair(IsoKind kind, const BasisKey& target) {
  if (kind == IsoKind::PSI) {
    const OrderedTree t = OrderedTree::parse(target);
    const int k = ord_component_count(t);
    // Every ordered tree factors into planted trees, so both counts agree.
    return {k, k};
  }
  const HeapOrderedTree t = HeapOrderedTree::parse(target);
  const int k = hot_component_count(t);
  const int l = static_cast<int>(hot_irreducible_components(t).size());
  return {k, l};
}

bool order_less(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

Lin iso_apply(IsoKind kind, const BasisKey& word) { return word_image(kind, word); }

Lin iso_apply(IsoKind kind, const Lin& element) {
  return extend_linearly(element,
                         [&](const BasisKey& w) { return word_image(kind, w); });
}

BasisKey iso_leading_target(IsoKind kind, const BasisKey& word) {
  if (kind == IsoKind::PSI) return psi(word_to_pbt(word_letters(word))).str();
  return phi(word_to_perm(word_letters(word))).str();
}

DegreeCertificate triangularity_certificate(IsoKind kind, int degree) {
  if (degree < 1) throw std::invalid_argument("certificate degree must be >= 1");

  DegreeCertificate cert;
  cert.iso = kind;
  cert.degree = degree;

  const HopfAlgebra& source = iso_source(kind);
  const HopfAlgebra& target = iso_target(kind);

  std::vector<OrderedKey> rows;
  for (const auto& t : target.basis(degree))
    rows.push_back({target_order_pair(kind, t), t});
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    cert.target.push_back(row.key);
    cert.target_order.push_back(row.order);
  }

  std::map<BasisKey, int> row_of;
  for (std::size_t r = 0; r < cert.target.size(); ++r)
    row_of.emplace(cert.target[r], static_cast<int>(r));

  struct Column {
    OrderedKey leading;
    BasisKey word;
    bool operator<(const Column& other) const {
      if (!(leading.order == other.leading.order) ||
          leading.key != other.leading.key)
        return leading < other.leading;
      return word < other.word;
    }
  };
  std::vector<Column> cols;
  for (const auto& w : source.basis(degree)) {
    const BasisKey lead = iso_leading_target(kind, w);
    cols.push_back({{target_order_pair(kind, lead), lead}, w});
  }
  std::sort(cols.begin(), cols.end());
  for (const auto& col : cols) cert.source.push_back(col.word);

  cert.dims_match = cert.source.size() == cert.target.size();
  if (!cert.dims_match) {
    std::ostringstream msg;
    msg << "source dimension " << cert.source.size() << " != target dimension "
        << cert.target.size();
    record_failure(cert, msg.str());
  }

  cert.matrix.assign(cert.target.size(),
                     std::vector<Rational>(cert.source.size(), Rational(0)));

  bool columns_ok = true;
  std::map<int, BasisKey> leading_seen;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& col = cols[c];
    const Lin image = iso_apply(kind, col.word);
    for (const auto& [t, coeff] : image.terms()) {
      auto it = row_of.find(t);
      if (it == row_of.end()) {
        columns_ok = false;
        record_failure(cert, "column " + col.word +
                                 ": image term outside the target basis: " + t);
        continue;
      }
      cert.matrix[it->second][c] = coeff;
    }

    auto lead_it = row_of.find(col.leading.key);
    if (lead_it == row_of.end()) {
      columns_ok = false;
      cert.leading_row.push_back(-1);
      record_failure(cert, "column " + col.word +
                               ": leading tree missing from target basis: " +
                               col.leading.key);
      continue;
    }
    const int lead = lead_it->second;
    cert.leading_row.push_back(lead);

    auto [dup, inserted] = leading_seen.emplace(lead, col.word);
    if (!inserted) {
      columns_ok = false;
      record_failure(cert, "columns " + dup->second + " and " + col.word +
                               " share the leading tree " + col.leading.key);
    }

    if (cert.matrix[lead][c] != Rational(1)) {
      columns_ok = false;
      record_failure(cert, "column " + col.word + ": leading coefficient " +
                               cert.matrix[lead][c].str() + " at " +
                               col.leading.key);
    }
    for (std::size_t r = 0; r < cert.target.size(); ++r) {
      if (static_cast<int>(r) == lead) continue;
      if (order_less(cert.target_order[r], col.leading.order)) continue;
      if (!cert.matrix[r][c].is_zero()) {
        columns_ok = false;
        record_failure(cert, "column " + col.word + ": entry " +
                                 cert.matrix[r][c].str() +
                                 " at a tree of order >= the leading tree: " +
                                 cert.target[r]);
      }
    }
  }

  cert.unitriangular = columns_ok &&
                       leading_seen.size() == cols.size() &&
                       cert.dims_match;
  cert.pass = cert.unitriangular && cert.dims_match;
  return cert;
}

Lin iso_expand(IsoKind kind, const Lin& target_element) {
  const HopfAlgebra& target = iso_target(kind);
  const HopfAlgebra& source = iso_source(kind);

  std::map<int, Lin> by_degree;
  for (const auto& [key, coeff] : target_element.terms())
    by_degree[target.degree(key)].add(key, coeff);

  Lin result;
  for (const auto& [degree, part] : by_degree) {
    if (degree == 0) {
      result.add(source.unit(), part.coeff(target.unit()));
      continue;
    }
    const DegreeCertificate& cert = cached_certificate(kind, degree);
    if (!cert.pass)
      throw std::runtime_error("change of basis at degree " +
                               std::to_string(degree) + " for " +
                               iso_kind_name(kind) + " is not unitriangular");

    const std::size_t n = cert.source.size();
    std::vector<Rational> v(n, Rational(0));
    for (const auto& [key, coeff] : part.terms()) {
      auto it = std::find(cert.target.begin(), cert.target.end(), key);
      if (it == cert.target.end())
        throw std::invalid_argument("not a target basis element: " + key);
      v[static_cast<std::size_t>(it - cert.target.begin())] = coeff;
    }

    // With rows and columns sorted by the same order, a passing certificate
    // puts the leading 1 of column c in row c; back-substitute from the last
    // column up.
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
      Rational acc = v[i];
      for (std::size_t c = i + 1; c < n; ++c)
        acc -= cert.matrix[i][c] * x[c];
      x[i] = acc;
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!x[c].is_zero()) result.add(cert.source[c], x[c]);
  }
  return result;
}

std::string certificates_json(const std::vector<DegreeCertificate>& certs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& cert : certs) {
    nlohmann::ordered_json entry;
    entry["iso"] = iso_kind_name(cert.iso);
    entry["degree"] = cert.degree;
    entry["pass"] = cert.pass;
    entry["dims_match"] = cert.dims_match;
    entry["unitriangular"] = cert.unitriangular;
    entry["source"] = cert.source;
    entry["target"] = cert.target;
    nlohmann::ordered_json orders = nlohmann::ordered_json::array();
    for (const auto& [k, l] : cert.target_order) orders.push_back({k, l});
    entry["target_order"] = orders;
    entry["leading_row"] = cert.leading_row;
    nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
    for (const auto& row : cert.matrix) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const auto& cell : row) cells.push_back(cell.str());
      matrix.push_back(cells);
    }
    entry["matrix"] = matrix;
    entry["failures"] = cert.failures;
    out.push_back(entry);
  }
  return out.dump(2);
}

MorphismReport verify_hopf_morphism(IsoKind kind, int max_degree) {
  MorphismReport report;
  const HopfAlgebra& source = iso_source(kind);
  const HopfAlgebra& target = iso_target(kind);

  auto fail = [&](const std::string& message) {
    report.pass = false;
    if (report.failures.size() < kMaxFailures) report.failures.push_back(message);
  };

  ++report.checked;
  if (iso_apply(kind, source.unit()) != target.unit_lin())
    fail("unit is not preserved");

  std::vector<std::vector<BasisKey>> bases;
  for (int d = 0; d <= max_degree; ++d) bases.push_back(source.basis(d));

  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& w : bases[d]) {
      const Lin image = iso_apply(kind, w);

      ++report.checked;
      if (target.counit(image) != source.counit(w))
        fail("counit mismatch on " + w);

      ++report.checked;
      Pair2 lhs = target.coproduct(image);
      Pair2 rhs;
      const Pair2 delta = source.coproduct(w);
      for (const auto& [pair, coeff] : delta.terms()) {
        Pair2 piece = tensor2(iso_apply(kind, pair.first),
                              iso_apply(kind, pair.second));
        piece *= coeff;
        rhs += piece;
      }
      if (lhs != rhs) fail("coproduct mismatch on " + w);
    }
  }

  for (int da = 0; da <= max_degree; ++da) {
    for (int db = 0; da + db <= max_degree; ++db) {
      for (const auto& a : bases[da]) {
        for (const auto& b : bases[db]) {
          ++report.checked;
          const Lin lhs = iso_apply(kind, source.product(a, b));
          const Lin rhs =
              target.product(iso_apply(kind, a), iso_apply(kind, b));
          if (lhs != rhs) fail("product mismatch on (" + a + ", " + b + ")");
        }
      }
    }
  }
  return report;
}

std::vector<FreenessRow> freeness_report(AlgebraId target, int max_degree) {
  if (target != AlgebraId::HO && target != AlgebraId::HHO)
    throw std::invalid_argument(
        "freeness report applies to the tree algebras only");

  std::vector<long long> generators(max_degree + 1, 0);
  for (int d = 1; d <= max_degree; ++d) {
    generators[d] = target == AlgebraId::HO
                        ? static_cast<long long>(enumerate_planted(d).size())
                        : static_cast<long long>(
                              enumerate_irreducible_perm(d).size());
  }

  std::vector<long long> words(max_degree + 1, 0);
  words[0] = 1;
  for (int n = 1; n <= max_degree; ++n)
    for (int d = 1; d <= n; ++d) words[n] += generators[d] * words[n - d];

  const HopfAlgebra& alg = algebra(target);
  std::vector<FreenessRow> rows;
  for (int n = 1; n <= max_degree; ++n) {
    FreenessRow row;
    row.degree = n;
    row.generators = generators[n];
    row.word_count = words[n];
    row.target_dim = static_cast<long long>(alg.basis(n).size());
    row.match = row.word_count == row.target_dim;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hopf
