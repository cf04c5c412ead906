#include "hopf/verify.hpp"

#include <sstream>

#include "hopf/machinery.hpp"

namespace hopf {
namespace {

constexpr std::size_t kMaxFailures = 5;

void record_failure(CheckReport& check, const std::string& message) {
  check.pass = false;
  if (check.failures.size() < kMaxFailures) check.failures.push_back(message);
}

std::string tuple_text(std::initializer_list<BasisKey> keys) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& k : keys) {
    if (!first) out << ", ";
    out << k;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebra& alg, int max_total_degree) {
  AxiomReport report;

  std::vector<std::vector<BasisKey>> bases;
  for (int d = 0; d <= max_total_degree; ++d) bases.push_back(alg.basis(d));

  CheckReport assoc{"associativity", true, 0, {}};
  CheckReport unit{"unit laws", true, 0, {}};
  CheckReport coassoc{"coassociativity", true, 0, {}};
  CheckReport counit_law{"counit laws", true, 0, {}};
  CheckReport compat{"coproduct of product", true, 0, {}};
  CheckReport counit_mult{"counit multiplicative", true, 0, {}};
  CheckReport grading{"grading", true, 0, {}};
  CheckReport comm{"commutativity", true, 0, {}};
  CheckReport cocomm{"cocommutativity", true, 0, {}};

  const Lin one = alg.unit_lin();

  // Single-basis checks.
  for (int d = 0; d <= max_total_degree; ++d) {
    for (const auto& a : bases[d]) {
      const Lin la = Lin::basis(a);

      ++unit.checked;
      if (alg.product(one, la) != la || alg.product(la, one) != la)
        record_failure(unit, a);

      ++coassoc.checked;
      if (iterated_coproduct(alg, la, 2) != iterated_coproduct_right(alg, la, 2))
        record_failure(coassoc, a);

      const Pair2 delta = alg.coproduct(a);

      ++counit_law.checked;
      Lin left, right;
      for (const auto& [pair, c] : delta.terms()) {
        left.add(pair.second, c * alg.counit(pair.first));
        right.add(pair.first, c * alg.counit(pair.second));
      }
      if (left != la || right != la) record_failure(counit_law, a);

      ++grading.checked;
      for (const auto& [pair, c] : delta.terms()) {
        (void)c;
        if (alg.degree(pair.first) + alg.degree(pair.second) != d)
          record_failure(grading, "coproduct of " + a);
      }

      if (alg.expected_cocommutative()) {
        ++cocomm.checked;
        if (swap_sides(delta) != delta) record_failure(cocomm, a);
      }
    }
  }

  // Pair checks.
  for (int da = 0; da <= max_total_degree; ++da) {
    for (int db = 0; da + db <= max_total_degree; ++db) {
      for (const auto& a : bases[da]) {
        for (const auto& b : bases[db]) {
          const Lin ab = alg.product(a, b);

          ++compat.checked;
          if (alg.coproduct(ab) !=
              alg.pair_product(alg.coproduct(a), alg.coproduct(b)))
            record_failure(compat, tuple_text({a, b}));

          ++counit_mult.checked;
          if (alg.counit(ab) != alg.counit(a) * alg.counit(b))
            record_failure(counit_mult, tuple_text({a, b}));

          ++grading.checked;
          for (const auto& [key, c] : ab.terms()) {
            (void)c;
            if (alg.degree(key) != da + db)
              record_failure(grading, "product " + tuple_text({a, b}));
          }

          if (alg.expected_commutative()) {
            ++comm.checked;
            if (ab != alg.product(b, a)) record_failure(comm, tuple_text({a, b}));
          }
        }
      }
    }
  }

  // Triple checks.
  for (int da = 0; da <= max_total_degree; ++da) {
    for (int db = 0; da + db <= max_total_degree; ++db) {
      for (int dc = 0; da + db + dc <= max_total_degree; ++dc) {
        for (const auto& a : bases[da]) {
          for (const auto& b : bases[db]) {
            for (const auto& c : bases[dc]) {
              ++assoc.checked;
              if (alg.product(alg.product(a, b), Lin::basis(c)) !=
                  alg.product(Lin::basis(a), alg.product(b, c)))
                record_failure(assoc, tuple_text({a, b, c}));
            }
          }
        }
      }
    }
  }

  report.checks = {assoc, unit, coassoc, counit_law, compat, counit_mult, grading};
  if (alg.expected_commutative()) report.checks.push_back(comm);
  if (alg.expected_cocommutative()) report.checks.push_back(cocomm);
  for (const auto& check : report.checks) {
    report.checked += check.checked;
    report.pass = report.pass && check.pass;
  }
  return report;
}

}  // namespace hopf
