#include "helpers.hpp"

#include "pfjet/groebner.hpp"
#include "pfjet/pfaffian.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pfjet;

namespace {

using Q = Polynomial<Rationals>;
using P = Polynomial<PrimeField>;

template <class F>
bool is_reduced_basis(const std::vector<Polynomial<F>>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!basis[a].field().is_one(basis[a].leading_coefficient())) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (std::size_t t = 0; t < basis[b].size(); ++t) {
        if (divides(basis[a].leading_monomial(), basis[b].term_monomial(t))) return false;
      }
    }
  }
  return true;
}

template <class F>
bool no_term_divisible(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  for (std::size_t t = 0; t < f.size(); ++t) {
    for (const auto& g : basis) {
      if (divides(g.leading_monomial(), f.term_monomial(t))) return false;
    }
  }
  return true;
}

int exponent_of(const Monomial& m, const VarId& v) {
  for (const auto& [w, e] : m.support()) {
    if (w == v) return e;
  }
  return 0;
}

}  // namespace

TEST_CASE("reduce produces a normal form") {
  const auto ring = make_jet_ring(3, 1);
  const auto x = Q::variable(ring, Rationals{}, VarId::jet(1, 2, 0));
  const auto y = Q::variable(ring, Rationals{}, VarId::jet(1, 3, 0));
  const auto z = Q::variable(ring, Rationals{}, VarId::jet(2, 3, 0));
  const std::vector<Q> basis{x * x - y, x * y - z};
  std::size_t steps = 0;
  const auto r = reduce<Rationals>(x * x * y + z, basis, &steps);
  CHECK(r == y * y + z);
  CHECK(steps > 0);
  CHECK(no_term_divisible(r, basis));
  CHECK(reduce<Rationals>(x * x - y, basis).is_zero());
  CHECK(reduce<Rationals>(Q(ring), basis).is_zero());
  CHECK(reduce<Rationals>(z, std::vector<Q>{}) == z);
}

TEST_CASE("s-polynomial cancels leading terms") {
  const auto ring = make_jet_ring(3, 1);
  const auto x = Q::variable(ring, Rationals{}, VarId::jet(1, 2, 0));
  const auto y = Q::variable(ring, Rationals{}, VarId::jet(1, 3, 0));
  const auto s = s_polynomial(x * x + y, x * y);
  CHECK(s == y * y);
}

TEST_CASE("is_groebner on {x + y, x} depends on which variable is larger") {
  const auto ring = make_jet_ring(3, 1);
  // x[1,2,0] is the largest variable of the ring
  const auto big = Q::variable(ring, Rationals{}, VarId::jet(1, 2, 0));
  const auto small = Q::variable(ring, Rationals{}, VarId::jet(1, 3, 0));

  const std::vector<Q> big_first{big + small, big};
  CHECK_FALSE(is_groebner<Rationals>(big_first));
  const auto obstruction = groebner_obstruction<Rationals>(big_first);
  REQUIRE(obstruction.has_value());
  CHECK((*obstruction == small || *obstruction == -small));

  const std::vector<Q> small_first{small + big, small};
  CHECK(is_groebner<Rationals>(small_first));
  CHECK_FALSE(groebner_obstruction<Rationals>(small_first).has_value());

  const auto gb = buchberger<Rationals>(big_first);
  CHECK(gb.elements == std::vector<Q>{small, big});
}

TEST_CASE("n = 2: the generators themselves form the basis") {
  for (int k = 1; k <= 4; ++k) {
    const auto ideal = jet_generators(2, k, 1, Rationals{});
    const auto gens = ideal.polynomials();
    CHECK(is_groebner<Rationals>(gens));
    const auto gb = buchberger<Rationals>(gens);
    CHECK(gb.size() == static_cast<std::size_t>(k));
    for (const auto& g : gb.elements) CHECK(g.size() == 1);
  }
}

TEST_CASE("4x4 jet ideals are principal-like: the generators already form a Groebner basis") {
  for (int k = 1; k <= 3; ++k) {
    const auto gens = jet_generators(4, k, 2, Rationals{}).polynomials();
    CHECK(is_groebner<Rationals>(gens));
    const auto gb = buchberger<Rationals>(gens);
    CHECK(gb.size() == static_cast<std::size_t>(k));
    CHECK(leading_monomial_ideal<Rationals>(gens) == initial_ideal(gb));
  }
}

TEST_CASE("5x5 pfaffians at k = 1 form a basis of five quadrics") {
  const auto gens = jet_generators(5, 1, 2, Rationals{}).polynomials();
  const auto gb = buchberger<Rationals>(gens);
  CHECK(gb.size() == 5);
  for (const auto& g : gb.elements) CHECK(g.total_degree() == 2);
  CHECK(is_reduced_basis(gb.elements));
}

TEST_CASE("(6,2,2) generators are not a basis; the obstruction lies in the ideal") {
  const auto gens = jet_generators(6, 2, 2, Rationals{}).polynomials();
  CHECK_FALSE(is_groebner<Rationals>(gens));
  const auto obstruction = groebner_obstruction<Rationals>(gens);
  REQUIRE(obstruction.has_value());
  CHECK_FALSE(obstruction->is_zero());
  CHECK(no_term_divisible(*obstruction, gens));
  const auto gb = buchberger<Rationals>(gens);
  CHECK(gb.size() == 61);
  CHECK(reduce<Rationals>(*obstruction, gb.elements).is_zero());
}

TEST_CASE("basis properties over F_p: reducedness, membership, criterion") {
  const PrimeField p;
  std::mt19937_64 rng(5);
  for (const auto& [n, k, r] : std::vector<std::tuple<int, int, int>>{{5, 2, 2}, {5, 3, 2}, {6, 1, 2}, {6, 2, 2}}) {
    const auto ideal = jet_generators(n, k, r, p);
    const auto gens = ideal.polynomials();
    GbOptions opt;
    opt.verify = true;
    const auto gb = buchberger<PrimeField>(gens, opt);
    CHECK(gb.verified);
    CHECK(gb.reduced);
    CHECK(is_reduced_basis(gb.elements));
    CHECK(is_groebner<PrimeField>(gb.elements));
    for (std::size_t a = 1; a < gb.size(); ++a) {
      CHECK(compare(gb.elements[a - 1].leading_monomial(), gb.elements[a].leading_monomial()) < 0);
    }
    for (const auto& g : gens) CHECK(reduce<PrimeField>(g, gb.elements).is_zero());
    for (int trial = 0; trial < 5; ++trial) {
      P combo(ideal.ring, p);
      for (const auto& g : gens) combo += pfjet::testing::random_poly(ideal.ring, p, rng, 2, 2) * g;
      CHECK(reduce<PrimeField>(combo, gb.elements).is_zero());
    }
    const auto outsider = P::variable(ideal.ring, p, VarId::jet(1, 2, 0));
    CHECK_FALSE(reduce<PrimeField>(outsider, gb.elements).is_zero());
  }
}

TEST_CASE("the reduced basis does not depend on strategy, threads or field") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {6, 2}}) {
    const auto gq = jet_generators(n, k, 2, Rationals{}).polynomials();
    const auto gp = jet_generators(n, k, 2, PrimeField{}).polynomials();
    const auto base = buchberger<Rationals>(gq);

    GbOptions reversed;
    reversed.strategy = PairStrategy::normal_reversed;
    CHECK(buchberger<Rationals>(gq, reversed).elements == base.elements);

    GbOptions threaded;
    threaded.threads = 3;
    CHECK(buchberger<Rationals>(gq, threaded).elements == base.elements);

    const auto fp = buchberger<PrimeField>(gp);
    auto fp_threaded = buchberger<PrimeField>(gp, threaded);
    CHECK(fp_threaded.elements == fp.elements);
    CHECK(initial_ideal(fp) == initial_ideal(base));
  }
}

TEST_CASE("strategy names round trip") {
  CHECK(parse_pair_strategy("normal") == PairStrategy::normal);
  CHECK(parse_pair_strategy(to_string(PairStrategy::normal_reversed)) == PairStrategy::normal_reversed);
  CHECK_THROWS_AS(parse_pair_strategy("sugarless"), std::invalid_argument);
}

TEST_CASE("resource limits") {
  const auto gens = jet_generators(6, 2, 2, PrimeField{}).polynomials();

  GbOptions capped;
  capped.degree_cap = 2;
  try {
    buchberger<PrimeField>(gens, capped);
    FAIL("expected the degree cap to trigger");
  } catch (const ResourceLimitExceeded& e) {
    CHECK(e.kind() == ResourceLimitExceeded::Kind::degree_cap);
  }

  GbOptions timed;
  timed.time_limit = std::chrono::milliseconds(0);
  try {
    buchberger<PrimeField>(gens, timed);
    FAIL("expected a timeout");
  } catch (const ResourceLimitExceeded& e) {
    CHECK(e.kind() == ResourceLimitExceeded::Kind::timeout);
  }

  std::stop_source source;
  source.request_stop();
  GbOptions stopped;
  stopped.stop = source.get_token();
  try {
    buchberger<PrimeField>(gens, stopped);
    FAIL("expected cancellation");
  } catch (const ResourceLimitExceeded& e) {
    CHECK(e.kind() == ResourceLimitExceeded::Kind::cancelled);
  }

  GbOptions roomy;
  roomy.degree_cap = 20;
  CHECK(buchberger<PrimeField>(gens, roomy).size() == 61);
}

TEST_CASE("inputs from different rings are rejected") {
  const auto a = Q::variable(make_jet_ring(3, 1), Rationals{}, VarId::jet(1, 2, 0));
  const auto b = Q::variable(make_jet_ring(4, 1), Rationals{}, VarId::jet(1, 2, 0));
  CHECK_THROWS(buchberger<Rationals>(std::vector<Q>{a, b}));
}

TEST_CASE("saturation of small monomial ideals") {
  const auto ring = make_jet_ring(3, 1);
  const auto x = Q::variable(ring, Rationals{}, VarId::jet(1, 2, 0));
  const auto y = Q::variable(ring, Rationals{}, VarId::jet(1, 3, 0));
  const auto one = Q::constant(ring, Rationals{}, 1);

  const auto unit = saturate<Rationals>(std::vector<Q>{x * x}, x);
  CHECK(unit.elements == std::vector<Q>{one});

  const auto sat = saturate<Rationals>(std::vector<Q>{x * y}, x);
  CHECK(sat.elements == std::vector<Q>{y});
  CHECK(sat.ring == ring);

  const auto mixed = saturate<Rationals>(std::vector<Q>{x * x * y, x * y * y}, y);
  CHECK(mixed.elements == std::vector<Q>{x});
}

TEST_CASE("saturating (6,2,2) by the smallest variable matches the homogeneous division oracle") {
  const auto ideal = jet_generators(6, 2, 2, PrimeField{});
  const auto gens = ideal.polynomials();
  const VarId v = VarId::jet(5, 6, 0);
  REQUIRE(ideal.ring->var(ideal.ring->num_vars() - 1) == v);

  // for a homogeneous ideal under graded revlex with v smallest, dividing each
  // basis element by its largest power of v generates the saturation
  const auto gb = buchberger<PrimeField>(gens);
  std::vector<P> divided;
  for (const auto& g : gb.elements) {
    int low = 1 << 20;
    for (std::size_t t = 0; t < g.size(); ++t) low = std::min(low, exponent_of(g.term_monomial(t), v));
    divided.push_back(g.divided_by(Monomial::variable(ideal.ring, v, static_cast<exponent>(low))));
  }
  const auto oracle = buchberger<PrimeField>(divided);

  const auto f = P::variable(ideal.ring, PrimeField{}, v);
  const auto sat = saturate<PrimeField>(gens, f);
  CHECK(sat.elements == oracle.elements);
  CHECK(sat.size() == 52);

  const auto again = saturate<PrimeField>(sat.elements, f);
  CHECK(again.elements == sat.elements);
}
