#pragma once

#include "hopf/algebra.hpp"

namespace hopf::detail {

const HopfAlgebra& ho_algebra();
const HopfAlgebra& hho_algebra();
const HopfAlgebra& qsym_algebra();
const HopfAlgebra& shuffle_algebra(AlgebraId id);  // GR_YSYM, GR_SSYM, SH
const HopfAlgebra& tensor_algebra(AlgebraId id);   // GR_YSYM_DUAL, GR_SSYM_DUAL, TENSOR

}  // namespace hopf::detail
