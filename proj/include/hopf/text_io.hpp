#pragma once

#include <string>
#include <string_view>

#include "hopf/algebra.hpp"

namespace hopf {

/// Terms sorted by canonical basis order: "c1*B1 + c2*B2"; the zero element
/// prints as "0". Coefficients print as p or p/q, always explicit.
std::string lincomb_text(const Lin& a);

/// Tensor-square terms as "c*[left | right]" joined with " + "; zero is "0".
std::string paircomb_text(const Pair2& a);

/// JSON array [{"coeff":"-1/2","basis":"<canonical string>"}, ...] in basis order.
std::string lincomb_json(const Lin& a);

/// JSON array [{"coeff":"1","left":"...","right":"..."}, ...] in basis order.
std::string paircomb_json(const Pair2& a);

/// Parses the JSON array form; every basis string is canonicalized through alg.
Lin lincomb_from_json(const HopfAlgebra& alg, std::string_view text);

/// A single basis string, or (when the text starts with '[') the JSON form.
Lin lincomb_parse_input(const HopfAlgebra& alg, std::string_view text);

}  // namespace hopf
