#include "hopf/algebra.hpp"

#include <ostream>
#include <stdexcept>

#include "hopf/enumeration.hpp"

#include "algebra_impl.hpp"

namespace hopf {

AlgebraId parse_algebra_id(std::string_view name) {
  for (AlgebraId id : all_algebra_ids()) {
    if (algebra_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown algebra: \"" + std::string(name) + "\"");
}

std::string algebra_name(AlgebraId id) {
  switch (id) {
    case AlgebraId::HO: return "HO";
    case AlgebraId::HHO: return "HHO";
    case AlgebraId::GR_YSYM: return "GR_YSYM";
    case AlgebraId::GR_SSYM: return "GR_SSYM";
    case AlgebraId::GR_YSYM_DUAL: return "GR_YSYM_DUAL";
    case AlgebraId::GR_SSYM_DUAL: return "GR_SSYM_DUAL";
    case AlgebraId::QSYM: return "QSYM";
    case AlgebraId::SH: return "SH";
    case AlgebraId::TENSOR: return "TENSOR";
  }
  throw std::logic_error("unreachable");
}

const std::vector<AlgebraId>& all_algebra_ids() {
  static const std::vector<AlgebraId> ids = {
      AlgebraId::HO,           AlgebraId::HHO,    AlgebraId::GR_YSYM,
      AlgebraId::GR_SSYM,      AlgebraId::GR_YSYM_DUAL,
      AlgebraId::GR_SSYM_DUAL, AlgebraId::QSYM,   AlgebraId::SH,
      AlgebraId::TENSOR,
  };
  return ids;
}

Lin HopfAlgebra::product(const Lin& a, const Lin& b) const {
  Lin out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      Lin term = product(x, y);
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

Pair2 HopfAlgebra::coproduct(const Lin& a) const {
  Pair2 out;
  for (const auto& [x, c] : a.terms()) {
    Pair2 term = coproduct(x);
    term *= c;
    out += term;
  }
  return out;
}

Lin HopfAlgebra::multiply_pairs(const Pair2& t) const {
  Lin out;
  for (const auto& [p, c] : t.terms()) {
    Lin term = product(p.first, p.second);
    term *= c;
    out += term;
  }
  return out;
}

Pair2 HopfAlgebra::pair_product(const Pair2& s, const Pair2& t) const {
  Pair2 out;
  for (const auto& [p, cp] : s.terms()) {
    for (const auto& [q, cq] : t.terms()) {
      Pair2 term = tensor2(product(p.first, q.first), product(p.second, q.second));
      term *= cp * cq;
      out += term;
    }
  }
  return out;
}

int HopfAlgebra::max_degree(const Lin& a) const {
  int d = 0;
  for (const auto& [x, c] : a.terms()) d = std::max(d, degree(x));
  return d;
}

const HopfAlgebra& algebra(AlgebraId id) {
  switch (id) {
    case AlgebraId::HO: return detail::ho_algebra();
    case AlgebraId::HHO: return detail::hho_algebra();
    case AlgebraId::QSYM: return detail::qsym_algebra();
    case AlgebraId::GR_YSYM:
    case AlgebraId::GR_SSYM:
    case AlgebraId::SH: return detail::shuffle_algebra(id);
    case AlgebraId::GR_YSYM_DUAL:
    case AlgebraId::GR_SSYM_DUAL:
    case AlgebraId::TENSOR: return detail::tensor_algebra(id);
  }
  throw std::logic_error("unreachable");
}

int algebra_degree_cap(AlgebraId id) {
  switch (id) {
    case AlgebraId::HHO:
    case AlgebraId::GR_SSYM:
    case AlgebraId::GR_SSYM_DUAL: return enumeration_caps().perm_degree;
    default: return enumeration_caps().tree_degree;
  }
}

namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

void export_structure_constants(const HopfAlgebra& alg, int max_total_degree, std::ostream& os) {
  os << "degA,basisA,degB,basisB,basisOut,coeff\n";
  for (int da = 0; da <= max_total_degree; ++da) {
    for (int db = 0; db + da <= max_total_degree; ++db) {
      for (const auto& a : alg.basis(da)) {
        for (const auto& b : alg.basis(db)) {
          const Lin prod = alg.product(a, b);
          for (const auto& [out, coeff] : prod.terms()) {
            os << da << "," << csv_quote(a) << "," << db << "," << csv_quote(b) << ","
               << csv_quote(out) << "," << coeff.str() << "\n";
          }
        }
      }
    }
  }
}

}  // namespace hopf
