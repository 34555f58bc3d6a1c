#include "helpers.hpp"

#include "pfjet/polyring.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace pfjet;
using pfjet::testing::monomials_of_degree;
using pfjet::testing::random_poly;

namespace {

// Ranking written directly from the variable-order definition: higher h first,
// then (i,j) row-major.
bool oracle_var_greater(const VarId& a, const VarId& b) {
  if (a.h != b.h) return a.h > b.h;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<VarId> oracle_ranking(int n, int k) {
  std::vector<VarId> vars;
  for (int h = 0; h < k; ++h) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::jet(i, j, h));
    }
  }
  std::sort(vars.begin(), vars.end(), oracle_var_greater);
  return vars;
}

// Graded reverse lexicographic comparison on exponent maps.
int oracle_compare(const std::map<VarId, int>& a, const std::map<VarId, int>& b, const std::vector<VarId>& ranking) {
  int da = 0, db = 0;
  for (const auto& [v, e] : a) da += e;
  for (const auto& [v, e] : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
    const int ea = a.count(*it) ? a.at(*it) : 0;
    const int eb = b.count(*it) ? b.at(*it) : 0;
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

std::map<VarId, int> exponent_map(const Monomial& m) {
  std::map<VarId, int> out;
  for (const auto& [v, e] : m.support()) out[v] = e;
  return out;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("make_jet_ring variable counts") {
  CHECK(make_jet_ring(5, 3)->num_vars() == 30);
  CHECK(make_jet_ring(6, 2)->num_vars() == 30);
  const auto r2 = make_jet_ring(2, 4);
  REQUIRE(r2->num_vars() == 4);
  for (int h = 0; h < 4; ++h) CHECK(r2->position(VarId::jet(1, 2, h)).has_value());
  CHECK_THROWS_AS(make_jet_ring(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_jet_ring(4, 0), std::invalid_argument);
}

TEST_CASE("variables are distinct") {
  const auto ring = make_jet_ring(5, 3);
  auto vars = ring->vars();
  std::sort(vars.begin(), vars.end());
  CHECK(std::adjacent_find(vars.begin(), vars.end()) == vars.end());
}

TEST_CASE("largest and smallest variable") {
  for (int n : {3, 4, 6}) {
    for (int k : {1, 2, 3}) {
      const auto ring = make_jet_ring(n, k);
      const auto top = Monomial::variable(ring, VarId::jet(1, 2, k - 1));
      const auto bottom = Monomial::variable(ring, VarId::jet(n - 1, n, 0));
      if (ring->num_vars() > 1) CHECK(compare(top, bottom) > 0);
      CHECK(compare(top, top) == 0);
      CHECK(ring->var(0) == VarId::jet(1, 2, k - 1));
      CHECK(ring->var(ring->num_vars() - 1) == VarId::jet(n - 1, n, 0));
    }
  }
}

TEST_CASE("degree-one monomials sort like the brute-force ranking for (4,2)") {
  const auto ring = make_jet_ring(4, 2);
  const auto ranking = oracle_ranking(4, 2);
  auto mons = monomials_of_degree(ring, 1);
  std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  REQUIRE(mons.size() == ranking.size());
  for (std::size_t q = 0; q < mons.size(); ++q) CHECK(mons[q] == Monomial::variable(ring, ranking[q]));
}

TEST_CASE("compare is a total order matching graded revlex on degree <= 2 for (4,2)") {
  const auto ring = make_jet_ring(4, 2);
  const auto ranking = oracle_ranking(4, 2);
  std::vector<Monomial> mons;
  for (int d = 0; d <= 2; ++d) {
    for (auto& m : monomials_of_degree(ring, d)) mons.push_back(m);
  }
  REQUIRE(mons.size() == 1 + 12 + 78);
  std::vector<std::vector<int>> table(mons.size(), std::vector<int>(mons.size()));
  for (std::size_t a = 0; a < mons.size(); ++a) {
    for (std::size_t b = 0; b < mons.size(); ++b) {
      table[a][b] = sign(compare(mons[a], mons[b]));
      CHECK(table[a][b] == oracle_compare(exponent_map(mons[a]), exponent_map(mons[b]), ranking));
      CHECK((table[a][b] == 0) == (a == b));
    }
  }
  for (std::size_t a = 0; a < mons.size(); ++a) {
    for (std::size_t b = 0; b < mons.size(); ++b) {
      if (table[a][b] >= 0) continue;
      for (std::size_t c = 0; c < mons.size(); ++c) {
        if (table[b][c] < 0 && table[a][c] >= 0) FAIL("transitivity violated");
      }
    }
  }
}

TEST_CASE("compare respects multiplication") {
  const auto ring = make_jet_ring(5, 2);
  std::mt19937_64 rng(11);
  const auto deg2 = monomials_of_degree(ring, 2);
  const auto deg1 = monomials_of_degree(ring, 1);
  std::uniform_int_distribution<std::size_t> p2(0, deg2.size() - 1), p1(0, deg1.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = deg2[p2(rng)];
    const auto& b = deg2[p2(rng)];
    const auto c = deg1[p1(rng)] * deg2[p2(rng)];
    CHECK(sign(compare(a, b)) == sign(compare(a * c, b * c)));
  }
}

TEST_CASE("compare rejects monomials from different rings") {
  const auto a = Monomial::variable(make_jet_ring(4, 2), VarId::jet(1, 2, 0));
  const auto b = Monomial::variable(make_jet_ring(5, 2), VarId::jet(1, 2, 0));
  CHECK_THROWS_AS((void)compare(a, b), RingMismatch);
}

TEST_CASE("polynomial arithmetic basics") {
  const auto ring = make_jet_ring(4, 1);
  const Rationals q;
  const auto x12 = Polynomial<Rationals>::variable(ring, q, VarId::jet(1, 2, 0));
  const auto x13 = Polynomial<Rationals>::variable(ring, q, VarId::jet(1, 3, 0));
  const auto f = x12 + x13;
  CHECK((f + (-f)).is_zero());
  const auto sq = f * f;
  CHECK(to_string(sq) == "x[1,2,0]^2 + 2*x[1,2,0]*x[1,3,0] + x[1,3,0]^2");
  CHECK(sq == x12 * x12 + x12 * x13.scaled(2) + x13 * x13);
  CHECK(sq.total_degree() == 2);
  CHECK(sq.is_homogeneous());
  CHECK(sq.leading_coefficient() == 1);
  CHECK(f.scaled(0).is_zero());
}

TEST_CASE("distributivity over the prime field") {
  const auto ring = make_jet_ring(4, 2);
  const PrimeField p(32003);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(ring, p, rng, 6, 3);
    const auto g = random_poly(ring, p, rng, 6, 3);
    const auto h = random_poly(ring, p, rng, 4, 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("products agree with a term-by-term expansion") {
  const auto ring = make_jet_ring(4, 2);
  const PrimeField p(32003);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_poly(ring, p, rng, 5, 3);
    const auto g = random_poly(ring, p, rng, 5, 3);
    std::map<std::vector<exponent>, std::uint32_t> expected;
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        const auto m = f.term_monomial(a) * g.term_monomial(b);
        auto key = std::vector<exponent>(m.packed_exponents().begin(), m.packed_exponents().end());
        expected[key] = p.add(expected[key], p.mul(f.coefficient(a), g.coefficient(b)));
      }
    }
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    const auto prod = f * g;
    REQUIRE(prod.size() == expected.size());
    for (std::size_t t = 0; t < prod.size(); ++t) {
      const auto m = prod.term_monomial(t);
      CHECK(expected.at(std::vector<exponent>(m.packed_exponents().begin(), m.packed_exponents().end())) == prod.coefficient(t));
    }
    for (std::size_t t = 1; t < prod.size(); ++t) CHECK(compare(prod.term_monomial(t - 1), prod.term_monomial(t)) > 0);
  }
}

TEST_CASE("exact rational arithmetic: (f*m)/m recovers f") {
  const auto ring = make_jet_ring(4, 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = pfjet::testing::random_rational_poly(ring, rng, 6, 3);
    const auto m = Monomial::from_powers(ring, {{VarId::jet(1, 3, 1), 2}, {VarId::jet(2, 4, 0), 1}});
    const auto g = Polynomial<Rationals>::term(m, Rationals{}, mpq_class(3, 7));
    const auto prod = f * g;
    CHECK(prod.divided_by(m).scaled(mpq_class(7, 3)) == f);
  }
}

TEST_CASE("mixed fields and rings are rejected") {
  const auto ring = make_jet_ring(4, 1);
  const auto a = Polynomial<PrimeField>::variable(ring, PrimeField(32003), VarId::jet(1, 2, 0));
  const auto b = Polynomial<PrimeField>::variable(ring, PrimeField(101), VarId::jet(1, 2, 0));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  const auto c = Polynomial<PrimeField>::variable(make_jet_ring(5, 1), PrimeField(32003), VarId::jet(1, 2, 0));
  CHECK_THROWS_AS(a * c, RingMismatch);
}

TEST_CASE("prime field validation and symmetric printing") {
  CHECK_THROWS_AS(PrimeField(32004), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  const PrimeField p(7);
  CHECK(p.mul(3, p.inv(3)) == 1);
  CHECK(p.to_string(6) == "-1");
  CHECK(p.from_int(-1) == 6);
  CHECK(p.from_ratio(1, 2) == 4);
}

TEST_CASE("text round trip") {
  const auto ring = make_jet_ring(4, 2);
  const std::string text = "x[1,2,1]^2 - 1/2*x[1,3,0]*x[2,4,1] + 3";
  const auto f = parse_polynomial<Rationals>(text, ring);
  CHECK(f.size() == 3);
  CHECK(parse_polynomial<Rationals>(to_string(f), ring) == f);
  CHECK(parse_polynomial<Rationals>("0", ring).is_zero());
  CHECK_THROWS_AS(parse_polynomial<Rationals>("x[1,5,0]", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rationals>("x[1,2,0] +", ring), ParseError);
  const auto big = with_auxiliary(ring);
  const auto g = parse_polynomial<PrimeField>("w*x[1,2,0] - 1", big, PrimeField{});
  CHECK(to_string(g) == "w*x[1,2,0] - 1");
}

TEST_CASE("elimination order puts the auxiliary block first") {
  const auto ring = with_auxiliary(make_jet_ring(4, 1));
  const auto w = Monomial::variable(ring, VarId::auxiliary());
  const auto x2 = Monomial::variable(ring, VarId::jet(1, 2, 0), 3);
  CHECK(compare(w, x2) > 0);
  CHECK_FALSE(ring->order().is_degree_compatible());
}

TEST_CASE("primitive integer and monic conversions") {
  const auto ring = make_jet_ring(4, 1);
  const auto f = parse_polynomial<Rationals>("-2/3*x[1,2,0] + 4/9*x[1,3,0]", ring);
  const auto z = to_primitive_integer(f);
  CHECK(z.leading_coefficient() == 3);
  CHECK(z.coefficient(1) == -2);
  CHECK(to_monic_rational(z) == f.monic());
  const auto r = reduce_mod(f, PrimeField(7));
  CHECK(r.size() == 2);
}
