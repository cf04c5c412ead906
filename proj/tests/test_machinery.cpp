#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/bijections.hpp"
#include "hopf/graded_endo.hpp"
#include "hopf/machinery.hpp"
#include "hopf/permutation.hpp"

using namespace hopf;

namespace {

Lin heap_lin(const char* perm) { return Lin::basis(phi(Permutation::parse(perm)).str()); }
BasisKey heap_key(const char* perm) { return phi(Permutation::parse(perm)).str(); }

Rational coeff_mass(const TensorComb& t) {
  Rational sum;
  for (const auto& [key, c] : t.terms()) {
    (void)key;
    sum += c;
  }
  return sum;
}

}  // namespace

TEST_CASE("iterated coproducts are bracketing independent") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  for (int d = 0; d <= 4; ++d) {
    for (const auto& b : hho.basis(d)) {
      const Lin x = Lin::basis(b);
      for (int n = 0; n <= 3; ++n) {
        CHECK(iterated_coproduct(hho, x, n) == iterated_coproduct_right(hho, x, n));
      }
    }
  }
}

TEST_CASE("iterated coproduct goldens on a two-component heap tree") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  const Lin x = heap_lin("21");

  const TensorComb fold0 = iterated_coproduct(hho, x, 0);
  CHECK(fold0.coeff({heap_key("21")}) == Rational(1));
  CHECK(fold0.terms().size() == 1);

  const TensorComb fold2 = iterated_coproduct(hho, x, 2);
  CHECK(coeff_mass(fold2) == Rational(9));
  CHECK(fold2.coeff({"0()", "0(1())", "0(1())"}) == Rational(2));
  CHECK(fold2.coeff({"0(1())", "0(1())", "0()"}) == Rational(2));
  CHECK(fold2.coeff({"0()", "0()", heap_key("21")}) == Rational(1));
}

TEST_CASE("convolution powers of the positive projection") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);

  SUBCASE("power zero is unit times counit") {
    CHECK(conv_power_id_minus_one(hho, hho.unit_lin(), 0) == hho.unit_lin());
    CHECK(conv_power_id_minus_one(hho, heap_lin("213"), 0) == Lin::zero());
  }

  SUBCASE("power one is the positive-degree part") {
    CHECK(conv_power_id_minus_one(hho, heap_lin("213"), 1) == heap_lin("213"));
    CHECK(conv_power_id_minus_one(hho, hho.unit_lin(), 1) == Lin::zero());
    Lin mixed = heap_lin("21") + Rational(3) * hho.unit_lin();
    CHECK(conv_power_id_minus_one(hho, mixed, 1) == heap_lin("21"));
    CHECK(project_positive(hho, mixed) == heap_lin("21"));
  }

  SUBCASE("squared power splits a tree across its components") {
    Lin expected = Rational(2) * heap_lin("123") + heap_lin("132") + heap_lin("312") +
                   heap_lin("231");
    CHECK(conv_power_id_minus_one(hho, heap_lin("213"), 2) == expected);
    CHECK(conv_power_id_minus_one(hho, heap_lin("21"), 2) ==
          Rational(2) * (heap_lin("12") + heap_lin("21")));
  }

  SUBCASE("cube vanishes when no three-way positive split exists") {
    CHECK(conv_power_id_minus_one(hho, heap_lin("213"), 3) == Lin::zero());
  }
}

TEST_CASE("pruned, unpruned, and endomorphism convolution routes agree") {
  for (AlgebraId id : {AlgebraId::HO, AlgebraId::HHO, AlgebraId::QSYM}) {
    const HopfAlgebra& alg = algebra(id);
    const GradedEndo base = GradedEndo::id_minus_conv_unit(alg);
    for (int n = 0; n <= 4; ++n) {
      const GradedEndo powered = base.convolve_power(n);
      for (int d = 0; d <= 3; ++d) {
        for (const auto& b : alg.basis(d)) {
          const Lin x = Lin::basis(b);
          const Lin pruned = conv_power_id_minus_one(alg, x, n);
          CHECK(pruned == conv_power_id_minus_one_unpruned(alg, x, n));
          CHECK(pruned == powered.apply(x));
        }
      }
    }
  }
}

TEST_CASE("coradical level goldens") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  CHECK(coradical_level(hho, hho.unit_lin()) == 0);
  CHECK(coradical_level(hho, Lin::zero()) == 0);
  CHECK(coradical_level(hho, heap_lin("1")) == 1);
  CHECK(coradical_level(hho, heap_lin("12")) == 1);
  CHECK(coradical_level(hho, heap_lin("21")) == 2);
  CHECK(coradical_level(hho, heap_lin("321")) == 3);

  // in the concatenation realization the level of a word is its letter count
  const HopfAlgebra& dual = algebra(AlgebraId::GR_SSYM_DUAL);
  CHECK(coradical_level(dual, Lin::basis("e")) == 0);
  CHECK(coradical_level(dual, Lin::basis("1")) == 1);
  CHECK(coradical_level(dual, Lin::basis("12\\1")) == 2);
  CHECK(coradical_level(dual, Lin::basis("1\\1\\1")) == 3);
  CHECK(coradical_level(dual, Lin::basis("213")) == 1);
}

TEST_CASE("coradical level is bounded by degree") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  for (int d = 0; d <= 4; ++d) {
    for (const auto& b : ho.basis(d)) {
      const int level = coradical_level(ho, Lin::basis(b));
      CHECK(level <= d);
      if (d > 0) CHECK(level >= 1);
    }
  }
}

TEST_CASE("products respect the coradical filtration") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  for (int da = 1; da <= 4; ++da) {
    for (int db = 1; da + db <= 5; ++db) {
      for (const auto& a : ho.basis(da)) {
        for (const auto& b : ho.basis(db)) {
          const int ja = coradical_level(ho, Lin::basis(a));
          const int jb = coradical_level(ho, Lin::basis(b));
          CHECK(coradical_level(ho, ho.product(a, b)) <= ja + jb);
        }
      }
    }
  }
}

TEST_CASE("commutators drop one level in the filtration") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  for (int da = 1; da <= 3; ++da) {
    for (int db = 1; da + db <= 4; ++db) {
      for (const auto& a : ho.basis(da)) {
        for (const auto& b : ho.basis(db)) {
          const int ja = coradical_level(ho, Lin::basis(a));
          const int jb = coradical_level(ho, Lin::basis(b));
          Lin commutator = ho.product(a, b) - ho.product(b, a);
          CHECK(coradical_level(ho, commutator) <= ja + jb - 1);
        }
      }
    }
  }
}

TEST_CASE("primitivity detection") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);

  // trees with a single root child split trivially
  CHECK(is_primitive(ho, Lin::basis("(())")));
  CHECK(is_primitive(ho, Lin::basis("((()))")));
  CHECK(is_primitive(ho, Lin::basis("((()()))")));
  CHECK_FALSE(is_primitive(ho, Lin::basis("(()())")));

  CHECK(is_primitive(hho, heap_lin("12")));
  CHECK_FALSE(is_primitive(hho, heap_lin("213")));
  CHECK(is_primitive(hho, eulerian(hho, heap_lin("213"))));
  CHECK_FALSE(is_primitive(hho, hho.unit_lin()));
}

TEST_CASE("antipode goldens and the defining identity") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);

  CHECK(antipode(ho, ho.unit_lin()) == ho.unit_lin());
  CHECK(antipode(ho, Lin::basis("((()))")) == -Lin::basis("((()))"));
  CHECK(antipode(hho, heap_lin("12")) == -heap_lin("12"));

  // m (S x id) delta = unit counit, checked basis element by basis element
  auto convolution_inverse_law = [](const HopfAlgebra& alg, int max_degree) {
    for (int d = 0; d <= max_degree; ++d) {
      for (const auto& b : alg.basis(d)) {
        Lin folded;
        const Pair2 delta = alg.coproduct(b);
        for (const auto& [p, c] : delta.terms()) {
          Lin term = alg.product(antipode(alg, Lin::basis(p.first)), Lin::basis(p.second));
          term *= c;
          folded += term;
        }
        Lin expected = alg.unit_lin();
        expected *= alg.counit(b);
        CHECK(folded == expected);
      }
    }
  };
  convolution_inverse_law(ho, 5);
  convolution_inverse_law(hho, 4);
}

TEST_CASE("antipode is an involution on cocommutative algebras") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  for (int d = 0; d <= 4; ++d) {
    for (const auto& b : ho.basis(d)) {
      CHECK(antipode(ho, antipode(ho, Lin::basis(b))) == Lin::basis(b));
    }
  }
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  for (int d = 0; d <= 3; ++d) {
    for (const auto& b : hho.basis(d)) {
      CHECK(antipode(hho, antipode(hho, Lin::basis(b))) == Lin::basis(b));
    }
  }
}

TEST_CASE("first Eulerian idempotent goldens") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);

  CHECK(eulerian(hho, hho.unit_lin()) == Lin::zero());
  CHECK(eulerian(hho, heap_lin("12")) == heap_lin("12"));
  CHECK(eulerian(hho, heap_lin("21")) == -heap_lin("12"));

  Lin expected = heap_lin("213") - heap_lin("123") -
                 Rational(1, 2) * (heap_lin("132") + heap_lin("312") + heap_lin("231"));
  CHECK(eulerian(hho, heap_lin("213")) == expected);

  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  CHECK(eulerian(ho, Lin::basis("((()))")) == Lin::basis("((()))"));
}

TEST_CASE("Eulerian map is idempotent with primitive image") {
  for (AlgebraId id : {AlgebraId::HO, AlgebraId::HHO}) {
    const HopfAlgebra& alg = algebra(id);
    for (int d = 0; d <= 4; ++d) {
      for (const auto& b : alg.basis(d)) {
        const Lin image = eulerian(alg, Lin::basis(b));
        CHECK(eulerian(alg, image) == image);
        CHECK(is_primitive(alg, image));
      }
    }
  }
}

TEST_CASE("graded endomorphisms") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);

  const GradedEndo id = GradedEndo::identity(ho);
  CHECK(id.label() == "id");
  CHECK(GradedEndo::conv_unit(ho).label() == "1");
  CHECK(GradedEndo::id_minus_conv_unit(ho).label() == "(id-1)");
  CHECK(id.convolve(id).label() == "(id*id)");

  CHECK(id.apply(Lin::basis("(()())")) == Lin::basis("(()())"));
  CHECK(GradedEndo::conv_unit(ho).apply(Lin::basis("(()())")) == Lin::zero());
  CHECK(GradedEndo::conv_unit(ho).apply(ho.unit_lin()) == ho.unit_lin());

  // two identities convolved multiply the two halves of the coproduct
  CHECK(id.convolve(id).apply(Lin::basis("(())")) == Rational(2) * Lin::basis("(())"));
  CHECK(id.convolve(id).apply(Lin::basis("(()())")) ==
        Rational(2) * Lin::basis("(()())") + Rational(2) * ho.product("(())", "(())"));

  CHECK(id.convolve_power(0).apply(Lin::basis("(())")) == Lin::zero());
  CHECK(id.convolve_power(1).apply(Lin::basis("(())")) == Lin::basis("(())"));
  CHECK_THROWS_AS(id.convolve_power(-1), std::invalid_argument);
  CHECK_THROWS_WITH_AS(id.convolve(GradedEndo::identity(hho)),
                       doctest::Contains("different algebras: HO vs HHO"),
                       std::invalid_argument);
}
