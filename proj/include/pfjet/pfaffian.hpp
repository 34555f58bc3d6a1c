#pragma once

// Skew-symmetric matrices over truncated polynomial rings R[t]/(t^bound)
// and their pfaffians. Matrix indices are 1-based, matching x[i,j,h].

#include "pfjet/polyring.hpp"

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pfjet {

template <class T>
concept RingElement = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// c_0 + c_1 t + ... + c_{bound-1} t^{bound-1}; products drop every term of
/// degree >= bound.
template <RingElement T>
class TruncPoly {
 public:
  TruncPoly(std::size_t bound, T zero) : coeffs_(bound, zero), zero_(std::move(zero)) {
    if (bound == 0) throw std::invalid_argument("truncation bound must be positive");
  }

  /// c * t^power (zero when power >= bound).
  static TruncPoly monomial(std::size_t bound, const T& zero, const T& c, std::size_t power) {
    TruncPoly p(bound, zero);
    if (power < bound) p.coeffs_[power] = c;
    return p;
  }

  std::size_t bound() const { return coeffs_.size(); }
  const T& zero_element() const { return zero_; }

  const T& coeff(std::size_t h) const {
    if (h >= bound()) {
      throw std::out_of_range("t-coefficient " + std::to_string(h) + " beyond truncation bound " +
                              std::to_string(bound()));
    }
    return coeffs_[h];
  }
  void set_coeff(std::size_t h, T c) {
    if (h >= bound()) throw std::out_of_range("t-coefficient beyond truncation bound");
    coeffs_[h] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Smallest h with a nonzero coefficient, or bound() for zero.
  std::size_t order() const {
    for (std::size_t h = 0; h < bound(); ++h) {
      if (!coeffs_[h].is_zero()) return h;
    }
    return bound();
  }

  /// Largest h with a nonzero coefficient, or -1 for zero.
  long degree() const {
    for (std::size_t h = bound(); h-- > 0;) {
      if (!coeffs_[h].is_zero()) return static_cast<long>(h);
    }
    return -1;
  }

  /// Same series viewed with a different bound (truncating or zero-padding).
  TruncPoly with_bound(std::size_t bound) const {
    TruncPoly r(bound, zero_);
    for (std::size_t h = 0; h < std::min(bound, this->bound()); ++h) r.coeffs_[h] = coeffs_[h];
    return r;
  }

  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    a.require_bound(b);
    TruncPoly r = a;
    for (std::size_t h = 0; h < r.bound(); ++h) r.coeffs_[h] = a.coeffs_[h] + b.coeffs_[h];
    return r;
  }
  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
    a.require_bound(b);
    TruncPoly r = a;
    for (std::size_t h = 0; h < r.bound(); ++h) r.coeffs_[h] = a.coeffs_[h] - b.coeffs_[h];
    return r;
  }
  TruncPoly operator-() const {
    TruncPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.require_bound(b);
    TruncPoly r(a.bound(), a.zero_);
    for (std::size_t i = 0; i < a.bound(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.bound(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  bool operator==(const TruncPoly& b) const {
    require_bound(b);
    for (std::size_t h = 0; h < bound(); ++h) {
      if (!(coeffs_[h] - b.coeffs_[h]).is_zero()) return false;
    }
    return true;
  }

 private:
  void require_bound(const TruncPoly& b) const {
    if (bound() != b.bound()) throw std::invalid_argument("truncated polynomials with different bounds");
  }

  std::vector<T> coeffs_;
  T zero_;
};

/// Coefficient of t^h of a truncated series.
template <RingElement T>
const T& coeff_t(const TruncPoly<T>& f, std::size_t h) {
  return f.coeff(h);
}

/// n x n skew-symmetric matrix storing only the strict upper triangle.
template <RingElement T>
class SkewMatrix {
 public:
  SkewMatrix(std::size_t n, T zero) : n_(n), upper_(n * (n > 0 ? n - 1 : 0) / 2, zero), zero_(std::move(zero)) {}

  std::size_t size() const { return n_; }
  const T& zero_element() const { return zero_; }

  /// Entry (i,j), 1-based; below the diagonal returns -M[j,i].
  T at(std::size_t i, std::size_t j) const {
    check(i, j);
    if (i == j) return zero_;
    if (i < j) return upper_[slot(i, j)];
    return -upper_[slot(j, i)];
  }
  /// Reference to the stored entry (i,j) with i < j.
  const T& upper(std::size_t i, std::size_t j) const {
    check(i, j);
    if (i >= j) throw std::invalid_argument("upper() needs i < j");
    return upper_[slot(i, j)];
  }
  void set(std::size_t i, std::size_t j, T value) {
    check(i, j);
    if (i >= j) throw std::invalid_argument("set() needs i < j; the lower triangle is implied");
    upper_[slot(i, j)] = std::move(value);
  }

  /// Principal submatrix on the given 1-based indices (kept in the given order).
  SkewMatrix principal(const std::vector<std::size_t>& rows) const {
    SkewMatrix sub(rows.size(), zero_);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) sub.set(a + 1, b + 1, at(rows[a], rows[b]));
    }
    return sub;
  }

  /// Removes row and column l.
  SkewMatrix without(std::size_t l) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (i != l) rows.push_back(i);
    }
    return principal(rows);
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("matrix index out of range");
  }
  std::size_t slot(std::size_t i, std::size_t j) const {
    // row-major over the strict upper triangle, 1-based i < j
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
  }

  std::size_t n_;
  std::vector<T> upper_;
  T zero_;
};

/// One term of the matching expansion: pairs (i_1,j_1),...,(i_r,j_r) with
/// i_1 < ... < i_r and i_q < j_q, and the sign of [i_1 j_1 i_2 j_2 ...].
struct PerfectMatching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  int sign = 1;
};

/// All perfect matchings of {1..m}, m even, in lexicographic order.
std::vector<PerfectMatching> perfect_matchings(std::size_t m);

/// Permutation sign of a sequence of distinct integers (inversion count parity).
int permutation_sign(const std::vector<std::size_t>& seq);

/// Signed sum over perfect matchings. This is the normative definition.
template <RingElement T>
T pfaffian(const SkewMatrix<T>& m) {
  if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian of odd-sized matrix");
  if (m.size() == 0) throw std::invalid_argument("pfaffian of an empty matrix needs a unit element");
  T total = m.zero_element();
  for (const auto& match : perfect_matchings(m.size())) {
    T prod = m.upper(match.pairs[0].first, match.pairs[0].second);
    for (std::size_t q = 1; q < match.pairs.size(); ++q) prod = prod * m.upper(match.pairs[q].first, match.pairs[q].second);
    total = match.sign > 0 ? total + prod : total - prod;
  }
  return total;
}

/// First-row expansion pf(M) = sum_j (-1)^j M[1,j] pf(M without rows 1,j).
template <RingElement T>
T pfaffian_by_expansion(const SkewMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd-sized matrix");
  if (n == 0) throw std::invalid_argument("pfaffian of an empty matrix needs a unit element");
  if (n == 2) return m.upper(1, 2);
  T total = m.zero_element();
  for (std::size_t j = 2; j <= n; ++j) {
    if (m.upper(1, j).is_zero()) continue;
    std::vector<std::size_t> rows;
    for (std::size_t i = 2; i <= n; ++i) {
      if (i != j) rows.push_back(i);
    }
    T term = m.upper(1, j) * pfaffian_by_expansion(m.principal(rows));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Pfaffian of the principal submatrix on `rows` (1-based, any order is sorted).
template <RingElement T>
T sub_pfaffian(const SkewMatrix<T>& m, std::vector<std::size_t> rows) {
  if (rows.size() % 2 != 0) throw std::invalid_argument("sub-pfaffian needs an even number of rows");
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) throw std::invalid_argument("repeated row index");
  return pfaffian(m.principal(rows));
}

/// pf_l(M): pfaffian of M with row and column l removed (M of odd size).
template <RingElement T>
T pf_l(const SkewMatrix<T>& m, std::size_t l) {
  if (m.size() % 2 == 0) throw std::invalid_argument("pf_l needs an odd-sized matrix");
  return pfaffian(m.without(l));
}

/// All q-subsets of {1..n} in colex order.
std::vector<std::vector<std::size_t>> subsets_colex(std::size_t n, std::size_t q);

template <class F>
using JetEntry = TruncPoly<Polynomial<F>>;
template <class F>
using SkewJetMatrix = SkewMatrix<JetEntry<F>>;

/// X(t) with entries x_ij(t) = sum_h x[i,j,h] t^h, truncated at `bound`
/// (default: the ring's k, i.e. working modulo t^k).
template <class F>
SkewJetMatrix<F> generic_skew_jet_matrix(const RingPtr& ring, F field = F{}, std::size_t bound = 0) {
  const int n = ring->n();
  const int k = ring->k();
  if (n < 2 || k < 1) throw std::invalid_argument("generic jet matrix needs n >= 2 and k >= 1");
  if (bound == 0) bound = static_cast<std::size_t>(k);
  const Polynomial<F> zero(ring, field);
  SkewJetMatrix<F> m(static_cast<std::size_t>(n), JetEntry<F>(bound, zero));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      JetEntry<F> e(bound, zero);
      for (int h = 0; h < k && static_cast<std::size_t>(h) < bound; ++h) {
        e.set_coeff(static_cast<std::size_t>(h), Polynomial<F>::variable(ring, field, VarId::jet(i, j, h)));
      }
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(e));
    }
  }
  return m;
}

template <class F>
SkewJetMatrix<F> generic_skew_jet_matrix(int n, int k, F field = F{}) {
  return generic_skew_jet_matrix(make_jet_ring(n, k), field);
}

template <class F>
struct JetGenerator {
  std::vector<std::size_t> rows;
  int h = 0;
  Polynomial<F> poly;
};

/// The ideal I^{n,k}_r: t-coefficients h < k of every 2r-pfaffian of X(t).
template <class F>
struct JetIdeal {
  int n = 0;
  int k = 0;
  int r = 0;
  RingPtr ring;
  F field;
  std::vector<JetGenerator<F>> generators;

  std::vector<Polynomial<F>> polynomials() const {
    std::vector<Polynomial<F>> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
  }
};

/// Generators ordered by row set (colex), then h ascending.
template <class F>
JetIdeal<F> jet_generators(int n, int k, int r, F field = F{}) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (2 * r > n) throw std::invalid_argument("jet generators need 2r <= n");
  JetIdeal<F> ideal{n, k, r, make_jet_ring(n, k), field, {}};
  const auto x = generic_skew_jet_matrix(ideal.ring, field);
  for (const auto& rows : subsets_colex(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * r))) {
    const auto p = sub_pfaffian(x, rows);
    for (int h = 0; h < k; ++h) {
      ideal.generators.push_back({rows, h, coeff_t(p, static_cast<std::size_t>(h))});
    }
  }
  return ideal;
}

}  // namespace pfjet
