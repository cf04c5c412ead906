#pragma once

#include <string>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

struct CheckReport {
  std::string name;
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> failures;  // first few counterexamples
};

struct AxiomReport {
  bool pass = true;
  long long checked = 0;
  std::vector<CheckReport> checks;
};

/// Exhaustive suite over all basis tuples with total degree <= max_total_degree:
/// associativity, unit laws, coassociativity (both bracketings), counit laws,
/// coproduct-of-product compatibility, multiplicativity of the counit, grading
/// additivity, and the algebra's expected commutativity or cocommutativity.
AxiomReport verify_axioms(const HopfAlgebra& alg, int max_total_degree);

}  // namespace hopf
