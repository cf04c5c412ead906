#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

/// The two graded Hopf-algebra isomorphisms checked by this library:
///   PSI: tensor algebra on irreducible planar binary trees -> ordered-tree algebra
///   PHI: tensor algebra on irreducible permutations -> heap-ordered-tree algebra
enum class IsoKind { PSI, PHI };

IsoKind parse_iso_kind(std::string_view text);  // "psi" | "phi"
std::string iso_kind_name(IsoKind kind);

const HopfAlgebra& iso_source(IsoKind kind);  // GR_YSYM_DUAL / GR_SSYM_DUAL
const HopfAlgebra& iso_target(IsoKind kind);  // HO / HHO

/// (number of root components, number of irreducible factors) of a target
/// basis tree.  For ordered trees both entries coincide.
std::pair<int, int> target_order_pair(IsoKind kind, const BasisKey& target);

/// Strict comparison on order pairs: fewer components first; among equal
/// component counts, MORE irreducible factors first.
bool order_less(std::pair<int, int> a, std::pair<int, int> b);

/// Image of a single source basis word.  PSI maps each letter through the
/// tree-rotation bijection and multiplies in HO; PHI maps each letter through
/// the insertion bijection followed by the Eulerian idempotent and multiplies
/// in HHO.
Lin iso_apply(IsoKind kind, const BasisKey& word);
Lin iso_apply(IsoKind kind, const Lin& element);

/// The unique highest-order target tree in iso_apply(word): the image of the
/// left-to-right backslash product of the word's letters.
BasisKey iso_leading_target(IsoKind kind, const BasisKey& word);

/// Preimage of a target element under the isomorphism, computed degree by
/// degree via back substitution against the unitriangular change-of-basis
/// matrix.  Requires the relevant degree certificates to pass.
Lin iso_expand(IsoKind kind, const Lin& target_element);

/// Change-of-basis evidence for one degree: rows are target trees sorted by
/// ascending order pair (ties by canonical string), columns are source words
/// sorted by the order pair of their leading target tree.  The certificate
/// passes when the matrix is square, each column has coefficient exactly 1 on
/// its leading row, every other row of order >= the leading order is 0, and
/// the leading map is a bijection.
struct DegreeCertificate {
  IsoKind iso = IsoKind::PSI;
  int degree = 0;
  std::vector<BasisKey> source;                       // column labels
  std::vector<BasisKey> target;                       // row labels
  std::vector<std::pair<int, int>> target_order;      // per row
  std::vector<int> leading_row;                       // per column
  std::vector<std::vector<Rational>> matrix;          // matrix[row][col]
  bool dims_match = false;
  bool unitriangular = false;
  bool pass = false;
  std::vector<std::string> failures;
};

DegreeCertificate triangularity_certificate(IsoKind kind, int degree);

std::string certificates_json(const std::vector<DegreeCertificate>& certs);

/// Checks that iso_apply is a morphism of graded Hopf algebras up to the given
/// total degree: multiplicativity on all word pairs, compatibility with the
/// coproducts, and preservation of unit and counit.
struct MorphismReport {
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> failures;
};

MorphismReport verify_hopf_morphism(IsoKind kind, int max_degree);

/// Dimension bookkeeping showing the target algebra is as large as a free
/// associative algebra on its irreducible trees: word_count is the number of
/// words in generators of matching total degree, computed by convolution.
struct FreenessRow {
  int degree = 0;
  long long generators = 0;
  long long word_count = 0;
  long long target_dim = 0;
  bool match = false;
};

std::vector<FreenessRow> freeness_report(AlgebraId target, int max_degree);

}  // namespace hopf
