#include "helpers.hpp"

#include "pfjet/formulas.hpp"
#include "pfjet/groebner.hpp"
#include "pfjet/pfaffian.hpp"

#include <doctest.h>

#include <set>

using namespace pfjet;

namespace {

HilbertSeries computed_series(int n, int k, int r) {
  const auto gens = jet_generators(n, k, r, PrimeField{}).polynomials();
  return hilbert_series(initial_ideal(buchberger<PrimeField>(gens))).reduced();
}

bool disjoint_support(const Monomial& a, const Monomial& b) {
  std::set<VarId> vars;
  for (const auto& [v, e] : a.support()) vars.insert(v);
  for (const auto& [v, e] : b.support()) {
    if (vars.count(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("binomials and determinants") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));

  std::vector<std::vector<mpz_class>> m{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  CHECK(bareiss_determinant(m) == 2 * (3 - 2) - 0 + 1 * (1 - 3));
  std::vector<std::vector<mpz_class>> swap{{0, 1}, {1, 0}};
  CHECK(bareiss_determinant(swap) == -1);
  std::vector<std::vector<mpz_class>> singular{{1, 2}, {2, 4}};
  CHECK(bareiss_determinant(singular) == 0);

  std::vector<std::vector<ZPoly>> pm{{ZPoly{1, 1}, ZPoly{0, 1}}, {ZPoly{1}, ZPoly{1, 0, 1}}};
  CHECK(bareiss_determinant(pm) == ZPoly{1, 1, 1, 1} - ZPoly{0, 1});
}

TEST_CASE("classical dimension and multiplicity values") {
  CHECK(classical_dimension(5, 2) == 7);
  CHECK(classical_dimension(6, 2) == 9);
  CHECK(classical_multiplicity(6, 2) == 14);
  CHECK(classical_multiplicity(5, 2) == 5);
  for (int n = 2; n <= 8; ++n) {
    CHECK(classical_dimension(n, 1) == 0);
    CHECK(classical_multiplicity(n, 1) == 1);
  }
  // a single pfaffian: hypersurface of degree r
  CHECK(classical_dimension(6, 3) == 14);
  CHECK(classical_multiplicity(6, 3) == 3);
  CHECK(classical_multiplicity(8, 4) == 4);
  CHECK_THROWS_AS(classical_dimension(3, 2), std::invalid_argument);
}

TEST_CASE("classical series agree with Groebner computations") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 2}}) {
    const auto expected = computed_series(n, 1, r);
    const auto formula = classical_hilbert_series(n, r);
    CHECK(formula.numerator == expected.numerator);
    CHECK(formula.denominator_exp == expected.denominator_exp);
    CHECK(formula.ambient == expected.ambient);
  }
  CHECK(classical_hilbert_series(5, 2).numerator == ZPoly{1, 3, 1});
  CHECK(classical_hilbert_series(6, 2).numerator == ZPoly{1, 6, 6, 1});
}

TEST_CASE("classical series is consistent with dimension and multiplicity") {
  for (int r = 2; r <= 5; ++r) {
    for (int n = 2 * r; n <= 10; ++n) {
      const auto h = classical_hilbert_series(n, r);
      CHECK(h.is_reduced());
      CHECK(static_cast<long>(h.dimension()) == classical_dimension(n, r));
      CHECK(h.multiplicity() == classical_multiplicity(n, r));
    }
  }
}

TEST_CASE("complete-intersection series") {
  for (int k = 1; k <= 3; ++k) {
    const auto expected = computed_series(4, k, 2);
    const auto formula = ci_hilbert_series(4, k);
    CHECK(formula == expected);
  }
  const auto h43 = ci_hilbert_series(4, 3);
  CHECK(h43.numerator == ZPoly{1, 3, 3, 1});
  CHECK(h43.denominator_exp == 15);
  CHECK(h43.ambient == 18);
  CHECK(h43.codimension() == 3);

  CHECK(computed_series(6, 2, 3) == ci_hilbert_series(6, 2));
  CHECK(ci_hilbert_series(6, 2).multiplicity() == 9);

  const auto trivial = ci_hilbert_series(2, 4);
  CHECK(trivial.numerator == ZPoly{1});
  CHECK(trivial.dimension() == 0);

  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; k <= 6; ++k) {
      CHECK(ci_hilbert_series(2 * r, k).numerator == ci_hilbert_series(2 * r, 1).numerator.pow(static_cast<unsigned>(k)));
      mpz_class power = 1;
      for (int i = 0; i < k; ++i) power *= r;
      CHECK(ci_hilbert_series(2 * r, k).multiplicity() == power);
    }
  }
  CHECK_THROWS_AS(ci_hilbert_series(5, 1), std::invalid_argument);
}

TEST_CASE("leading-term formula matches actual leading monomials") {
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 4; ++k) {
      const auto ideal = jet_generators(2 * r, k, r, Rationals{});
      const auto formula = ci_leading_terms(2 * r, k);
      REQUIRE(formula.size() == ideal.generators.size());
      for (std::size_t h = 0; h < formula.size(); ++h) {
        CHECK(formula[h] == ideal.generators[h].poly.leading_monomial());
      }
    }
  }
}

TEST_CASE("leading terms are pairwise coprime of degree r") {
  for (int r = 1; r <= 5; ++r) {
    for (int k = 1; k <= 10; ++k) {
      const auto lt = ci_leading_terms(2 * r, k);
      CHECK(lt.size() == static_cast<std::size_t>(k));
      for (std::size_t a = 0; a < lt.size(); ++a) {
        CHECK(lt[a].degree() == r);
        for (std::size_t b = a + 1; b < lt.size(); ++b) CHECK(disjoint_support(lt[a], lt[b]));
      }
    }
  }
}

TEST_CASE("predicted codimensions") {
  for (int r = 1; r <= 6; ++r) {
    for (int k = 1; k <= 10; ++k) {
      CHECK(predicted_codim(2 * r, k, r) == k);
      CHECK(predicted_codim(2 * r + 1, k, r) == 3 * k);
    }
  }
  CHECK(predicted_codim(5, 3, 2) == 9);
  CHECK(predicted_codim(6, 2, 2) == 12);
  CHECK(predicted_codim(4, 7, 2) == 7);
  CHECK(predicted_codim(7, 1, 2) == 21 - 11);
  CHECK_FALSE(predicted_codim(8, 2, 3).has_value());
  CHECK_FALSE(predicted_codim(4, 2, 1).has_value());
  CHECK_THROWS_AS(predicted_codim(3, 1, 2), std::invalid_argument);

  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 1}}) {
    CHECK(static_cast<long>(computed_series(n, k, 2).codimension()) == predicted_codim(n, k, 2));
  }
}

TEST_CASE("component codimensions for r = 2") {
  const auto r62 = component_codims_r2(6, 2);
  REQUIRE(r62.components.size() == 2);
  CHECK(r62.components[0].label == "Z0");
  CHECK(r62.components[0].codim == 12);
  CHECK(r62.components[1].label == "Y0");
  CHECK(r62.components[1].codim == 15);
  CHECK(r62.smallest == "Z0");
  CHECK_FALSE(r62.pure);

  const auto r63 = component_codims_r2(6, 3);
  REQUIRE(r63.components.size() == 2);
  CHECK(r63.components[0].codim == 18);
  CHECK(r63.components[1].codim == 21);

  const auto r84 = component_codims_r2(8, 4);
  REQUIRE(r84.components.size() == 3);
  for (std::size_t s = 1; s < r84.components.size(); ++s) CHECK(r84.components[s].codim < r84.components[s - 1].codim);
  CHECK(r84.smallest == "Y1");
  CHECK(r84.count_lower_bound == 3);
  CHECK(r84.count_exact);

  CHECK_THROWS_AS(component_codims_r2(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(component_codims_r2(6, 1), std::invalid_argument);
}

TEST_CASE("component ordering flips with the sign of n^2 - 9n + 12") {
  for (int n = 6; n <= 20; ++n) {
    const long sign = static_cast<long>(n) * n - 9L * n + 12;
    for (int k = 2; k <= 10; ++k) {
      const auto rep = component_codims_r2(n, k);
      const long big = static_cast<long>(n) * (n - 1) / 2;
      const long small = static_cast<long>(n - 2) * (n - 3) / 2;
      for (std::size_t s = 0; s < rep.components.size(); ++s) {
        CHECK(rep.components[s].codim == (k - 2 * static_cast<long>(s)) * small + static_cast<long>(s) * big);
      }
      for (std::size_t s = 1; s < rep.components.size(); ++s) {
        if (sign > 0) CHECK(rep.components[s].codim < rep.components[s - 1].codim);
        if (sign < 0) CHECK(rep.components[s].codim > rep.components[s - 1].codim);
      }
      CHECK(rep.smallest == (sign > 0 ? rep.components.back().label : std::string("Z0")));
      CHECK_FALSE(rep.pure);
    }
  }
}

TEST_CASE("component count lower bounds") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(component_count_lower_bound(5, k, 2).value == 1);
    CHECK(component_count_lower_bound(4, k, 2).value == 1);
    CHECK(component_count_lower_bound(8, k, 2).value == (k == 1 ? 1 : k / 2 + 1));
  }
  const auto b862 = component_count_lower_bound(8, 6, 2);
  CHECK(b862.value == 4);
  CHECK(b862.exact);
  CHECK(component_count_lower_bound(10, 5, 3).value == 3);
  CHECK_FALSE(component_count_lower_bound(10, 5, 3).exact);
  CHECK(component_count_lower_bound(6, 4, 2).value == 2);
  CHECK(component_count_lower_bound(7, 4, 2).value == 2);
}
