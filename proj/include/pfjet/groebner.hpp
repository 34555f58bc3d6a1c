#pragma once

// Buchberger's algorithm with the normal selection strategy, the coprime and
// chain criteria (Gebauer-Moeller update), geobucket reduction and a final
// inter-reduction to the reduced basis.

#include "pfjet/polyring.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

namespace pfjet {

enum class PairStrategy {
  /// Smallest sugar degree, then smallest lcm, then insertion order.
  normal,
  /// Smallest sugar degree, then largest lcm, then reverse insertion order.
  normal_reversed,
};

std::string to_string(PairStrategy s);
PairStrategy parse_pair_strategy(const std::string& name);

struct GbOptions {
  PairStrategy strategy = PairStrategy::normal;
  unsigned threads = 1;
  std::optional<int> degree_cap;
  std::optional<std::chrono::milliseconds> time_limit;
  std::stop_token stop;
  /// Re-check the output with is_groebner before returning.
  bool verify = false;
};

struct GbStats {
  std::size_t reductions = 0;
  std::size_t spolys = 0;
  std::size_t zero_reductions = 0;
  std::size_t pruned_coprime = 0;
  std::size_t pruned_chain = 0;
  int max_degree = 0;
  double wall_time = 0.0;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  enum class Kind { degree_cap, timeout, cancelled };

  ResourceLimitExceeded(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

template <class F>
struct GroebnerBasis {
  RingPtr ring;
  F field;
  std::vector<Polynomial<F>> elements;
  bool reduced = false;
  bool verified = false;
  GbStats stats;

  std::size_t size() const { return elements.size(); }
};

/// Minimally generated monomial ideal; generators sorted ascending.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

std::string to_string(const MonomialIdeal& ideal);

/// Full normal form of f modulo the leading terms of `basis`.
template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, std::span<const Polynomial<F>> basis, std::size_t* steps = nullptr);

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

/// Reduced Groebner basis of the ideal generated by `gens` under the order of
/// their ring. Throws ResourceLimitExceeded on degree cap, timeout or stop.
template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const GbOptions& options = {});

/// True iff every S-polynomial reduces to zero (coprime pairs are skipped).
template <class F>
bool is_groebner(std::span<const Polynomial<F>> gens);

/// A nonzero normal form of some S-polynomial, if the set is not a Groebner basis.
template <class F>
std::optional<Polynomial<F>> groebner_obstruction(std::span<const Polynomial<F>> gens);

/// Ideal of leading monomials of the given polynomials.
template <class F>
MonomialIdeal leading_monomial_ideal(std::span<const Polynomial<F>> polys);

template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& gb) {
  return leading_monomial_ideal<F>(gb.elements);
}

/// I : f^infinity, computed as the w-free part of a Groebner basis of
/// I + (1 - w f) under an elimination order with w in the first block.
/// The result is the reduced basis of the saturation in the original ring.
template <class F>
GroebnerBasis<F> saturate(std::span<const Polynomial<F>> gens, const Polynomial<F>& f, const GbOptions& options = {});

}  // namespace pfjet
