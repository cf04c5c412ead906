#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/bijections.hpp"
#include "hopf/heap_ordered_tree.hpp"
#include "hopf/isomorphisms.hpp"
#include "hopf/machinery.hpp"
#include "hopf/permutation.hpp"
#include "hopf/word.hpp"

using namespace hopf;

namespace {

Lin heap_lin(const char* perm) { return Lin::basis(phi(Permutation::parse(perm)).str()); }
BasisKey heap_key(const char* perm) { return phi(Permutation::parse(perm)).str(); }

}  // namespace

TEST_CASE("isomorphism kinds, sources, and targets") {
  CHECK(parse_iso_kind("psi") == IsoKind::PSI);
  CHECK(parse_iso_kind("phi") == IsoKind::PHI);
  CHECK(iso_kind_name(IsoKind::PSI) == "psi");
  CHECK(iso_kind_name(IsoKind::PHI) == "phi");
  CHECK_THROWS_AS(parse_iso_kind("rho"), std::invalid_argument);

  CHECK(iso_source(IsoKind::PSI).id() == AlgebraId::GR_YSYM_DUAL);
  CHECK(iso_target(IsoKind::PSI).id() == AlgebraId::HO);
  CHECK(iso_source(IsoKind::PHI).id() == AlgebraId::GR_SSYM_DUAL);
  CHECK(iso_target(IsoKind::PHI).id() == AlgebraId::HHO);
}

TEST_CASE("order pairs of target trees") {
  using P = std::pair<int, int>;
  CHECK(target_order_pair(IsoKind::PSI, "()") == P{0, 0});
  CHECK(target_order_pair(IsoKind::PSI, "((()))") == P{1, 1});
  CHECK(target_order_pair(IsoKind::PSI, "(()())") == P{2, 2});
  CHECK(target_order_pair(IsoKind::PSI, "(()()())") == P{3, 3});

  CHECK(target_order_pair(IsoKind::PHI, "0()") == P{0, 0});
  CHECK(target_order_pair(IsoKind::PHI, heap_key("213")) == P{2, 1});
  CHECK(target_order_pair(IsoKind::PHI, heap_key("123")) == P{1, 1});
  CHECK(target_order_pair(IsoKind::PHI, heap_key("312")) == P{2, 2});
  CHECK(target_order_pair(IsoKind::PHI, heap_key("231")) == P{2, 2});
  CHECK(target_order_pair(IsoKind::PHI, heap_key("321")) == P{3, 3});

  CHECK(order_less({1, 1}, {2, 2}));
  CHECK(order_less({2, 2}, {2, 1}));  // more factors ranks strictly lower
  CHECK_FALSE(order_less({2, 1}, {2, 2}));
  CHECK_FALSE(order_less({2, 1}, {2, 1}));
  CHECK(order_less({0, 0}, {1, 1}));
}

TEST_CASE("word images under the isomorphisms") {
  CHECK(iso_apply(IsoKind::PSI, BasisKey("e")) == algebra(AlgebraId::HO).unit_lin());
  CHECK(iso_apply(IsoKind::PSI, BasisKey("(L L)")) == Lin::basis("(())"));
  CHECK(iso_apply(IsoKind::PSI, BasisKey("(L L)\\(L L)")) ==
        Lin::basis("((()))") + Lin::basis("(()())"));

  CHECK(iso_apply(IsoKind::PHI, BasisKey("e")) == algebra(AlgebraId::HHO).unit_lin());
  CHECK(iso_apply(IsoKind::PHI, BasisKey("1")) == heap_lin("1"));
  CHECK(iso_apply(IsoKind::PHI, BasisKey("1\\1")) == heap_lin("12") + heap_lin("21"));

  Lin e213 = heap_lin("213") - heap_lin("123") -
             Rational(1, 2) * (heap_lin("132") + heap_lin("312") + heap_lin("231"));
  CHECK(iso_apply(IsoKind::PHI, BasisKey("213")) == e213);

  // linear extension
  Lin combo = Lin::basis("1") + Rational(2) * Lin::basis("1\\1");
  CHECK(iso_apply(IsoKind::PHI, combo) ==
        heap_lin("1") + Rational(2) * (heap_lin("12") + heap_lin("21")));

  CHECK_THROWS_WITH_AS(iso_apply(IsoKind::PHI, BasisKey("231")),
                       doctest::Contains("not irreducible"), std::invalid_argument);
  CHECK_THROWS_AS(iso_apply(IsoKind::PSI, BasisKey("(L (L L))")), std::invalid_argument);
}

TEST_CASE("leading targets and the leading-order law") {
  CHECK(iso_leading_target(IsoKind::PSI, "(L L)\\(L L)") == "(()())");
  CHECK(iso_leading_target(IsoKind::PSI, "(L L)") == "(())");
  CHECK(iso_leading_target(IsoKind::PHI, "12\\1") == heap_key("231"));
  CHECK(iso_leading_target(IsoKind::PHI, "213") == heap_key("213"));

  for (IsoKind kind : {IsoKind::PSI, IsoKind::PHI}) {
    const HopfAlgebra& source = iso_source(kind);
    for (int d = 1; d <= 3; ++d) {
      for (const auto& w : source.basis(d)) {
        const Lin image = iso_apply(kind, w);
        const BasisKey lead = iso_leading_target(kind, w);
        CHECK(image.coeff(lead) == Rational(1));
        const auto lead_order = target_order_pair(kind, lead);
        for (const auto& [key, c] : image.terms()) {
          (void)c;
          if (key == lead) continue;
          CHECK(order_less(target_order_pair(kind, key), lead_order));
        }
      }
    }
  }
}

TEST_CASE("backslash product is the leading term of the tree product") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  for (int da = 1; da <= 3; ++da) {
    for (int db = 1; da + db <= 4; ++db) {
      for (const auto& a : hho.basis(da)) {
        for (const auto& b : hho.basis(db)) {
          const HeapOrderedTree ta = HeapOrderedTree::parse(a);
          const HeapOrderedTree tb = HeapOrderedTree::parse(b);
          const BasisKey lead = hot_backslash(ta, tb).str();
          const auto pa = target_order_pair(IsoKind::PHI, a);
          const auto pb = target_order_pair(IsoKind::PHI, b);
          const std::pair<int, int> expected{pa.first + pb.first, pa.second + pb.second};
          CHECK(target_order_pair(IsoKind::PHI, lead) == expected);

          const Lin prod = hho.product(a, b);
          CHECK(prod.coeff(lead) == Rational(1));
          for (const auto& [key, c] : prod.terms()) {
            (void)c;
            if (key == lead) continue;
            CHECK(order_less(target_order_pair(IsoKind::PHI, key), expected));
          }
        }
      }
    }
  }
}

TEST_CASE("Eulerian images of irreducible trees keep order-leading coefficient one") {
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& letter : irreducible_perm_alphabet().letters_of_weight(d)) {
      const BasisKey x = phi(Permutation::parse(letter)).str();
      const Lin image = eulerian(hho, Lin::basis(x));
      CHECK(image.coeff(x) == Rational(1));
      const auto top = target_order_pair(IsoKind::PHI, x);
      CHECK(top.second == 1);
      for (const auto& [key, c] : image.terms()) {
        (void)c;
        if (key == x) continue;
        CHECK(order_less(target_order_pair(IsoKind::PHI, key), top));
      }
    }
  }
}

TEST_CASE("generator images are primitive") {
  const HopfAlgebra& ho = algebra(AlgebraId::HO);
  for (int d = 1; d <= 5; ++d) {
    for (const auto& letter : irreducible_pbt_alphabet().letters_of_weight(d)) {
      const Lin image = iso_apply(IsoKind::PSI, BasisKey(letter));
      CHECK(image == Lin::basis(psi(PlanarBinaryTree::parse(letter)).str()));
      CHECK(is_primitive(ho, image));
    }
  }
  const HopfAlgebra& hho = algebra(AlgebraId::HHO);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& letter : irreducible_perm_alphabet().letters_of_weight(d)) {
      CHECK(is_primitive(hho, iso_apply(IsoKind::PHI, BasisKey(letter))));
    }
  }
}

TEST_CASE("degree certificates pass with the expected dimensions") {
  const long long catalan[] = {0, 1, 2, 5, 14, 42};
  for (int d = 1; d <= 5; ++d) {
    const DegreeCertificate cert = triangularity_certificate(IsoKind::PSI, d);
    CHECK(cert.pass);
    CHECK(cert.dims_match);
    CHECK(cert.unitriangular);
    CHECK(cert.failures.empty());
    CHECK(static_cast<long long>(cert.source.size()) == catalan[d]);
    CHECK(cert.target.size() == cert.source.size());
    CHECK(cert.matrix.size() == cert.target.size());
    for (std::size_t c = 0; c < cert.leading_row.size(); ++c) {
      CHECK(cert.leading_row[c] == static_cast<int>(c));
    }
  }
  const long long factorial[] = {0, 1, 2, 6, 24};
  for (int d = 1; d <= 4; ++d) {
    const DegreeCertificate cert = triangularity_certificate(IsoKind::PHI, d);
    CHECK(cert.pass);
    CHECK(static_cast<long long>(cert.source.size()) == factorial[d]);
    for (std::size_t c = 0; c < cert.leading_row.size(); ++c) {
      CHECK(cert.leading_row[c] == static_cast<int>(c));
    }
  }
  CHECK_THROWS_AS(triangularity_certificate(IsoKind::PSI, 0), std::invalid_argument);
}

TEST_CASE("certificate JSON is well formed") {
  std::vector<DegreeCertificate> certs;
  certs.push_back(triangularity_certificate(IsoKind::PHI, 2));
  const std::string text = certificates_json(certs);
  CHECK(text.find("unitriangular") != std::string::npos);

  const nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["iso"] == "phi");
  CHECK(parsed[0]["degree"] == 2);
  CHECK(parsed[0]["pass"] == true);
  CHECK(parsed[0]["matrix"].size() == 2);
  CHECK(parsed[0]["matrix"][0].size() == 2);
}

TEST_CASE("the word images form Hopf morphisms") {
  const MorphismReport psi_report = verify_hopf_morphism(IsoKind::PSI, 4);
  CHECK(psi_report.pass);
  CHECK(psi_report.failures.empty());
  CHECK(psi_report.checked == 111);

  const MorphismReport phi_report = verify_hopf_morphism(IsoKind::PHI, 3);
  CHECK(phi_report.pass);
  CHECK(phi_report.checked == 45);
}

TEST_CASE("expansion inverts the isomorphism degree by degree") {
  for (IsoKind kind : {IsoKind::PSI, IsoKind::PHI}) {
    const HopfAlgebra& source = iso_source(kind);
    const HopfAlgebra& target = iso_target(kind);
    for (int d = 0; d <= 4; ++d) {
      for (const auto& w : source.basis(d)) {
        CHECK(iso_expand(kind, iso_apply(kind, w)) == Lin::basis(w));
      }
      for (const auto& t : target.basis(d)) {
        CHECK(iso_apply(kind, iso_expand(kind, Lin::basis(t))) == Lin::basis(t));
      }
    }
  }
  CHECK(iso_expand(IsoKind::PSI, Lin::zero()) == Lin::zero());
  CHECK_THROWS_AS(iso_expand(IsoKind::PHI, Lin::basis("0(1() 2())")), std::invalid_argument);
}

TEST_CASE("expansion carries products to concatenation and coproducts to deshuffling") {
  struct Setup {
    IsoKind kind;
    int max_degree;
  };
  for (const Setup setup : {Setup{IsoKind::PSI, 4}, Setup{IsoKind::PHI, 3}}) {
    const HopfAlgebra& source = iso_source(setup.kind);
    const HopfAlgebra& target = iso_target(setup.kind);

    for (int da = 1; da < setup.max_degree; ++da) {
      for (int db = 1; da + db <= setup.max_degree; ++db) {
        for (const auto& x : target.basis(da)) {
          for (const auto& y : target.basis(db)) {
            const Lin lhs = iso_expand(setup.kind, target.product(x, y));
            const Lin rhs = source.product(iso_expand(setup.kind, Lin::basis(x)),
                                           iso_expand(setup.kind, Lin::basis(y)));
            CHECK(lhs == rhs);
          }
        }
      }
    }

    for (int d = 0; d <= setup.max_degree; ++d) {
      for (const auto& x : target.basis(d)) {
        Pair2 lhs = extend_bilinearly(target.coproduct(x), [&](const BasisKey& a,
                                                               const BasisKey& b) {
          return tensor2(iso_expand(setup.kind, Lin::basis(a)),
                         iso_expand(setup.kind, Lin::basis(b)));
        });
        const Pair2 rhs = source.coproduct(iso_expand(setup.kind, Lin::basis(x)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("target dimensions match a free algebra on the irreducibles") {
  const long long tree_gens[] = {0, 1, 1, 2, 5, 14, 42};
  const auto ho_rows = freeness_report(AlgebraId::HO, 6);
  REQUIRE(ho_rows.size() == 6);
  for (const auto& row : ho_rows) {
    CHECK(row.match);
    CHECK(row.generators == tree_gens[row.degree]);
    CHECK(row.word_count == row.target_dim);
  }

  const long long perm_gens[] = {0, 1, 1, 3, 13, 71, 461};
  const auto hho_rows = freeness_report(AlgebraId::HHO, 6);
  REQUIRE(hho_rows.size() == 6);
  for (const auto& row : hho_rows) {
    CHECK(row.match);
    CHECK(row.generators == perm_gens[row.degree]);
  }

  CHECK_THROWS_AS(freeness_report(AlgebraId::QSYM, 3), std::invalid_argument);
}
