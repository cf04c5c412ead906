#include "hopf/graded_endo.hpp"

#include <stdexcept>

namespace hopf {

GradedEndo::GradedEndo(const HopfAlgebra& alg, std::string label, Rule rule)
    : impl_(std::make_shared<Impl>(Impl{&alg, std::move(label), std::move(rule), {}})) {}

GradedEndo GradedEndo::identity(const HopfAlgebra& alg) {
  return GradedEndo(alg, "id", [](const BasisKey& b) { return Lin::basis(b); });
}

GradedEndo GradedEndo::conv_unit(const HopfAlgebra& alg) {
  const HopfAlgebra* a = &alg;
  return GradedEndo(alg, "1", [a](const BasisKey& b) {
    Lin out;
    out.add(a->unit(), a->counit(b));
    return out;
  });
}

GradedEndo GradedEndo::id_minus_conv_unit(const HopfAlgebra& alg) {
  const HopfAlgebra* a = &alg;
  return GradedEndo(alg, "(id-1)", [a](const BasisKey& b) {
    Lin out = Lin::basis(b);
    out.add(a->unit(), -a->counit(b));
    return out;
  });
}

Lin GradedEndo::apply(const BasisKey& b) const {
  auto it = impl_->memo.find(b);
  if (it != impl_->memo.end()) return it->second;
  Lin value = impl_->rule(b);
  impl_->memo.emplace(b, value);
  return value;
}

Lin GradedEndo::apply(const Lin& a) const {
  Lin out;
  for (const auto& [x, c] : a.terms()) {
    Lin term = apply(x);
    term *= c;
    out += term;
  }
  return out;
}

GradedEndo GradedEndo::convolve(const GradedEndo& other) const {
  if (impl_->alg != other.impl_->alg) {
    throw std::invalid_argument("convolution of endomorphisms over different algebras: " +
                                impl_->alg->name() + " vs " + other.impl_->alg->name());
  }
  GradedEndo f = *this;
  GradedEndo g = other;
  const HopfAlgebra* a = impl_->alg;
  return GradedEndo(*a, "(" + label() + "*" + other.label() + ")", [f, g, a](const BasisKey& b) {
    Lin out;
    const Pair2 delta = a->coproduct(b);
    for (const auto& [p, c] : delta.terms()) {
      Lin term = a->product(f.apply(p.first), g.apply(p.second));
      term *= c;
      out += term;
    }
    return out;
  });
}

GradedEndo GradedEndo::convolve_power(int n) const {
  if (n < 0) throw std::invalid_argument("convolution power must be nonnegative");
  if (n == 0) return conv_unit(*impl_->alg);
  GradedEndo acc = *this;
  for (int i = 1; i < n; ++i) acc = acc.convolve(*this);
  return acc;
}

}  // namespace hopf
