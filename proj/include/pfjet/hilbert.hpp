#pragma once

// Hilbert series, dimension and multiplicity of quotients by monomial ideals.

#include "pfjet/groebner.hpp"
#include "pfjet/zpoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pfjet {

/// numerator / (1 - z)^denominator_exp, for a quotient of a polynomial ring in `ambient` variables.
struct HilbertSeries {
  ZPoly numerator;
  std::size_t denominator_exp = 0;
  std::size_t ambient = 0;

  /// No further factor (1 - z) can be cancelled.
  bool is_reduced() const { return numerator.is_zero() || numerator.at_one() != 0; }
  HilbertSeries reduced() const;

  /// Krull dimension; requires a proper ideal.
  std::size_t dimension() const;
  std::size_t codimension() const { return ambient - dimension(); }
  /// Coefficients of the reduced numerator.
  std::vector<mpz_class> h_vector() const { return reduced().numerator.coeffs(); }
  /// Reduced numerator at z = 1; rejects series that are not in reduced form.
  mpz_class multiplicity() const;
  /// Coefficient of z^degree in the power series expansion.
  mpz_class coefficient(std::size_t degree) const;

  bool operator==(const HilbertSeries& other) const = default;
};

std::string to_string(const HilbertSeries& h);

/// Numerator over (1 - z)^N by pivot splitting N(I) = N(I + (m)) + z^deg(m) N(I : m).
ZPoly hilbert_numerator(const MonomialIdeal& ideal);
/// Unreduced series with denominator exponent N.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

/// N minus the minimum number of variables meeting every generator's support.
std::size_t dimension(const MonomialIdeal& ideal);
std::size_t codimension(const MonomialIdeal& ideal);

/// Number of degree-D monomials outside the ideal, by direct enumeration.
/// Throws std::length_error when more than `limit` monomials would be visited.
mpz_class standard_monomial_count(const MonomialIdeal& ideal, std::size_t degree, std::size_t limit = 5'000'000);

}  // namespace pfjet
