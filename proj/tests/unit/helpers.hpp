#pragma once

#include "pfjet/polyring.hpp"

#include <random>
#include <vector>

namespace pfjet::testing {

inline Polynomial<PrimeField> random_poly(const RingPtr& ring, const PrimeField& f, std::mt19937_64& rng, int terms,
                                          int max_deg) {
  std::uniform_int_distribution<std::size_t> pick(0, ring->num_vars() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> coef(1, f.modulus() - 1);
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<VarId, exponent>> powers;
    const int d = deg(rng);
    for (int q = 0; q < d; ++q) powers.emplace_back(ring->var(pick(rng)), 1);
    out.emplace_back(Monomial::from_powers(ring, powers), coef(rng));
  }
  return Polynomial<PrimeField>::from_terms(ring, f, out);
}

inline Polynomial<Rationals> random_rational_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<std::size_t> pick(0, ring->num_vars() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<std::pair<Monomial, mpq_class>> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<VarId, exponent>> powers;
    const int d = deg(rng);
    for (int q = 0; q < d; ++q) powers.emplace_back(ring->var(pick(rng)), 1);
    out.emplace_back(Monomial::from_powers(ring, powers), Rationals{}.from_ratio(coef(rng), 1 + rng() % 3));
  }
  return Polynomial<Rationals>::from_terms(ring, Rationals{}, out);
}

/// Every monomial of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  std::vector<std::pair<VarId, exponent>> powers;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(Monomial::from_powers(ring, powers));
      return;
    }
    for (std::size_t v = from; v < ring->num_vars(); ++v) {
      powers.emplace_back(ring->var(v), 1);
      self(self, v, left - 1);
      powers.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace pfjet::testing
