#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "hopf/algebra.hpp"

namespace hopf {

/// Linear endomorphism of one algebra, given by its action on basis elements.
/// Evaluation is lazy and memoized per basis element, so convolution powers
/// reuse lower powers. Copies share the underlying rule and memo.
class GradedEndo {
 public:
  using Rule = std::function<Lin(const BasisKey&)>;

  GradedEndo(const HopfAlgebra& alg, std::string label, Rule rule);

  static GradedEndo identity(const HopfAlgebra& alg);
  /// The convolution unit: unit times counit.
  static GradedEndo conv_unit(const HopfAlgebra& alg);
  /// Identity minus the convolution unit: projection onto positive degree.
  static GradedEndo id_minus_conv_unit(const HopfAlgebra& alg);

  const HopfAlgebra& alg() const { return *impl_->alg; }
  const std::string& label() const { return impl_->label; }

  Lin apply(const BasisKey& b) const;
  Lin apply(const Lin& a) const;

  /// Convolution: multiply the images of the two coproduct legs.
  /// Throws std::invalid_argument when the algebras differ.
  GradedEndo convolve(const GradedEndo& other) const;
  /// n-th convolution power; n = 0 is conv_unit.
  GradedEndo convolve_power(int n) const;

 private:
  struct Impl {
    const HopfAlgebra* alg;
    std::string label;
    Rule rule;
    std::map<BasisKey, Lin> memo;
  };

  std::shared_ptr<Impl> impl_;
};

}  // namespace hopf
