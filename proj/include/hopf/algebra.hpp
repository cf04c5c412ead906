#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopf/lincomb.hpp"

namespace hopf {

using BasisKey = std::string;
using Lin = LinComb<BasisKey>;
using Pair2 = PairComb<BasisKey>;

enum class AlgebraId {
  HO,
  HHO,
  GR_YSYM,
  GR_SSYM,
  GR_YSYM_DUAL,
  GR_SSYM_DUAL,
  QSYM,
  SH,
  TENSOR,
};

/// Exact CLI-facing names: HO, HHO, GR_YSYM, GR_SSYM, GR_YSYM_DUAL,
/// GR_SSYM_DUAL, QSYM, SH, TENSOR.
AlgebraId parse_algebra_id(std::string_view name);
std::string algebra_name(AlgebraId id);
const std::vector<AlgebraId>& all_algebra_ids();

/// A graded connected Hopf algebra presented on an explicit basis of canonical
/// strings, with structure maps given on basis elements and extended linearly.
class HopfAlgebra {
 public:
  virtual ~HopfAlgebra() = default;

  virtual AlgebraId id() const = 0;
  std::string name() const { return algebra_name(id()); }

  virtual BasisKey unit() const = 0;
  /// Validates and reformats a basis string; throws std::invalid_argument.
  virtual BasisKey canonical(std::string_view raw) const = 0;
  /// Degree of a canonical basis element (weight grading).
  virtual int degree(const BasisKey& a) const = 0;
  /// Complete duplicate-free basis of one degree, sorted by canonical string.
  virtual std::vector<BasisKey> basis(int degree) const = 0;
  virtual Lin product(const BasisKey& a, const BasisKey& b) const = 0;
  virtual Pair2 coproduct(const BasisKey& a) const = 0;

  virtual bool expected_commutative() const = 0;
  virtual bool expected_cocommutative() const = 0;

  // Linear and bilinear extensions of the structure maps.
  Lin unit_lin() const { return Lin::basis(unit()); }
  Rational counit(const BasisKey& a) const { return a == unit() ? Rational(1) : Rational(0); }
  Rational counit(const Lin& a) const { return a.coeff(unit()); }
  Lin product(const Lin& a, const Lin& b) const;
  Pair2 coproduct(const Lin& a) const;
  /// Multiplies the two sides of each pair: m applied to a tensor element.
  Lin multiply_pairs(const Pair2& t) const;
  /// Componentwise product on the tensor square: (a1,a2)·(b1,b2) = (a1b1, a2b2).
  Pair2 pair_product(const Pair2& s, const Pair2& t) const;
  /// Largest degree appearing in a (0 for the zero element).
  int max_degree(const Lin& a) const;
};

/// Singleton registry of the nine algebras above.
const HopfAlgebra& algebra(AlgebraId id);

/// The degree cap that applies to this algebra's basis enumerations.
int algebra_degree_cap(AlgebraId id);

/// Word-level structure maps of the shuffle/tensor families, usable directly.
Lin shuffle_words(const BasisKey& u, const BasisKey& v);
Pair2 deshuffle_word(const BasisKey& w);
Pair2 deconcat_word(const BasisKey& w);

/// Writes CSV rows `degA,basisA,degB,basisB,basisOut,coeff` (with header) for
/// all basis pairs with degA+degB <= max_total_degree.
void export_structure_constants(const HopfAlgebra& alg, int max_total_degree, std::ostream& os);

}  // namespace hopf
