#pragma once

// Explicit points of jet schemes: matrices whose entries are polynomials in t
// of degree < k over the coefficient field, evaluated with bound 2k so that
// pfaffian coefficients above the truncation level stay visible.

#include "pfjet/pfaffian.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfjet {

template <class F>
using Scalar = Polynomial<F>;
template <class F>
using ScalarSeries = TruncPoly<Scalar<F>>;

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
class JetPoint {
 public:
  using element = typename F::element;

  JetPoint(int n, int k, F field = F{})
      : n_(n), k_(k), field_(field), m_(check_size(n), ScalarSeries<F>(bound(k), Scalar<F>(constant_ring(), field))) {}

  int n() const { return n_; }
  int k() const { return k_; }
  const F& field() const { return field_; }
  const SkewMatrix<ScalarSeries<F>>& matrix() const { return m_; }

  /// Sets q_ij(t) = c_0 + c_1 t + ... (at most k coefficients), i < j.
  void set(std::size_t i, std::size_t j, const std::vector<element>& coeffs) {
    if (coeffs.size() > static_cast<std::size_t>(k_)) {
      throw std::invalid_argument("jet point entries must have t-degree < k");
    }
    ScalarSeries<F> e(bound(k_), zero());
    for (std::size_t h = 0; h < coeffs.size(); ++h) e.set_coeff(h, constant(coeffs[h]));
    m_.set(i, j, std::move(e));
  }

  /// Entry (i,j) as field coefficients c_0..c_{k-1}.
  std::vector<element> entry(std::size_t i, std::size_t j) const {
    const auto e = m_.at(i, j);
    std::vector<element> out;
    for (std::size_t h = 0; h < static_cast<std::size_t>(k_); ++h) out.push_back(value(e.coeff(h)));
    return out;
  }

  /// Simultaneous row/column permutation: new (a,b) = old (perm[a-1], perm[b-1]).
  JetPoint permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation size mismatch");
    JetPoint out(n_, k_, field_);
    out.m_ = m_.principal(perm);
    return out;
  }

  element value(const Scalar<F>& c) const { return c.is_zero() ? field_.zero() : c.coefficient(0); }

 private:
  static std::size_t check_size(int n) {
    if (n < 2) throw std::invalid_argument("jet point needs n >= 2");
    return static_cast<std::size_t>(n);
  }
  static std::size_t bound(int k) {
    if (k < 1) throw std::invalid_argument("jet point needs k >= 1");
    return 2 * static_cast<std::size_t>(k);
  }
  Scalar<F> zero() const { return Scalar<F>(constant_ring(), field_); }
  Scalar<F> constant(const element& c) const { return Scalar<F>::constant(constant_ring(), field_, c); }

  int n_;
  int k_;
  F field_;
  SkewMatrix<ScalarSeries<F>> m_;
};

/// A nonzero t-coefficient of some 2r-pfaffian below level k.
struct VarietyViolation {
  std::vector<std::size_t> rows;
  std::size_t h = 0;
  std::string value;
};

template <class F>
std::optional<VarietyViolation> variety_violation(const JetPoint<F>& p, int r) {
  if (r < 1 || 2 * r > p.n()) throw std::invalid_argument("need 1 <= r and 2r <= n");
  for (const auto& rows : subsets_colex(static_cast<std::size_t>(p.n()), static_cast<std::size_t>(2 * r))) {
    const auto pf = sub_pfaffian(p.matrix(), rows);
    for (std::size_t h = 0; h < static_cast<std::size_t>(p.k()); ++h) {
      if (!pf.coeff(h).is_zero()) return VarietyViolation{rows, h, p.field().to_string(p.value(pf.coeff(h)))};
    }
  }
  return std::nullopt;
}

/// True iff every 2r-pfaffian has vanishing t-coefficients 0..k-1.
template <class F>
bool on_variety(const JetPoint<F>& p, int r) {
  return !variety_violation(p, r).has_value();
}

/// Full pfaffian of the point, with coefficients up to t^{2k-1}.
template <class F>
ScalarSeries<F> point_pfaffian(const JetPoint<F>& p) {
  return pfaffian(p.matrix());
}

/// Coefficients of the pfaffian, c_0..c_{2k-1}.
template <class F>
std::vector<typename F::element> pfaffian_coefficients(const JetPoint<F>& p) {
  const auto pf = point_pfaffian(p);
  std::vector<typename F::element> out;
  for (std::size_t h = 0; h < pf.bound(); ++h) out.push_back(p.value(pf.coeff(h)));
  return out;
}

/// The 6 x 6 point with entries (1,2) = t^l, (3,4) = t^{l+1} (k = 2l+1) or
/// t^l (k = 2l), (5,6) = t^{k-1}; its pfaffian is t^{2k-1}.
template <class F>
JetPoint<F> crux2_witness(int k, F field = F{}) {
  if (k < 2) throw std::invalid_argument("witness needs k >= 2, got " + std::to_string(k));
  const int l = k / 2;
  JetPoint<F> p(6, k, field);
  auto power = [&](int e) {
    std::vector<typename F::element> c(static_cast<std::size_t>(e) + 1, field.zero());
    c.back() = field.one();
    return c;
  };
  p.set(1, 2, power(l));
  if (k % 2 == 1) {
    p.set(3, 4, power(l + 1));
  } else {
    p.set(3, 4, power(l));
  }
  p.set(5, 6, power(k - 1));
  return p;
}

/// Necessary condition for lying in the closure of U_56: with n = 6, r = 2 and
/// the point on the variety, the pfaffian has zero t-coefficients k..2k-1.
/// A false result certifies that the point is outside that closure; a true
/// result is not a membership proof.
template <class F>
bool z0_obstruction(const JetPoint<F>& p) {
  if (p.n() != 6) throw std::invalid_argument("z0_obstruction needs a 6 x 6 point");
  if (!on_variety(p, 2)) throw PreconditionViolation("z0_obstruction needs a point on the variety of 4-pfaffians");
  const auto pf = point_pfaffian(p);
  for (std::size_t h = static_cast<std::size_t>(p.k()); h < 2 * static_cast<std::size_t>(p.k()); ++h) {
    if (!pf.coeff(h).is_zero()) return false;
  }
  return true;
}

/// Random 6 x 6 point on the variety of 4-pfaffians with q_56(0) != 0, built
/// from random columns 5 and 6. Retries until on_variety confirms the point.
JetPoint<PrimeField> sample_u56_point(int k, std::mt19937_64& rng, const PrimeField& field = PrimeField{}, int max_tries = 64);

}  // namespace pfjet
