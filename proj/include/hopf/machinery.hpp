#pragma once

#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

/// Element of an n-fold tensor power, keyed by tuples of basis strings.
using TensorComb = LinComb<std::vector<BasisKey>>;

/// (n+1)-fold iterated coproduct with left bracketing: fold 0 is the identity,
/// fold n applies the coproduct to the first tensor factor of fold n-1.
TensorComb iterated_coproduct(const HopfAlgebra& alg, const Lin& a, int n);
/// Right-bracketed variant (coproduct applied to the last factor); agrees with
/// the left-bracketed one by coassociativity and serves as its cross-check.
TensorComb iterated_coproduct_right(const HopfAlgebra& alg, const Lin& a, int n);

/// Drops the degree-0 part: the projection whose convolution powers appear below.
Lin project_positive(const HopfAlgebra& alg, const Lin& a);

/// n-th convolution power of (identity minus unit-counit composite):
/// multiply the n factors of the (n-1)-fold coproduct after projecting each to
/// positive degree. n = 0 gives unit * counit(a).
Lin conv_power_id_minus_one(const HopfAlgebra& alg, const Lin& a, int n);

/// Same value computed by the literal unpruned composition; test oracle.
Lin conv_power_id_minus_one_unpruned(const HopfAlgebra& alg, const Lin& a, int n);

/// Minimal k such that the (k+1)-fold positive projection of the k-fold
/// coproduct vanishes. 0 for multiples of the unit, 1 for primitives.
int coradical_level(const HopfAlgebra& alg, const Lin& a);

/// Whether the coproduct of a equals unit tensor a plus a tensor unit.
bool is_primitive(const HopfAlgebra& alg, const Lin& a);

/// Antipode via the graded-connected series sum_{n>=0} (-1)^n of the n-th
/// convolution power above, truncated exactly at the maximal degree of a.
Lin antipode(const HopfAlgebra& alg, const Lin& a);

/// First Eulerian idempotent, the logarithm of the identity in the convolution
/// algebra: sum_{n>=1} ((-1)^{n+1}/n) of the n-th convolution power, truncated
/// exactly at the maximal degree of a.
Lin eulerian(const HopfAlgebra& alg, const Lin& a);

}  // namespace hopf
