#pragma once

// Dense reference computations shared by the unit and acceptance tests.

#include "pfjet/pfaffian.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace pfjet::oracles {

using S = Polynomial<PrimeField>;
using DenseFp = std::vector<std::vector<std::uint32_t>>;

inline S scalar(const PrimeField& f, std::uint32_t v) { return S::constant(constant_ring(), f, v); }

inline std::uint32_t value(const S& s) { return s.is_zero() ? 0 : s.coefficient(0); }

// Leibniz determinant over any ring element type.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    T prod = one;
    for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
    total = permutation_sign(perm) > 0 ? total + prod : total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Gaussian elimination determinant over F_p.
inline std::uint32_t gauss_det(DenseFp m, const PrimeField& f) {
  const std::size_t n = m.size();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const auto inv = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const auto factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

inline DenseFp random_skew(std::size_t n, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  DenseFp m(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = d(rng);
      m[j][i] = f.neg(m[i][j]);
    }
  }
  return m;
}

inline SkewMatrix<S> to_skew(const DenseFp& m, const PrimeField& f) {
  SkewMatrix<S> out(m.size(), S(constant_ring(), f));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) out.set(i + 1, j + 1, scalar(f, m[i][j]));
  }
  return out;
}

inline DenseFp conjugate(const DenseFp& b, const DenseFp& m, const PrimeField& f) {
  const std::size_t n = m.size();
  DenseFp bm(n, std::vector<std::uint32_t>(n, 0)), out = bm;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t q = 0; q < n; ++q) bm[i][j] = f.add(bm[i][j], f.mul(b[i][q], m[q][j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t q = 0; q < n; ++q) out[i][j] = f.add(out[i][j], f.mul(bm[i][q], b[j][q]));
    }
  }
  return out;
}

}  // namespace pfjet::oracles
