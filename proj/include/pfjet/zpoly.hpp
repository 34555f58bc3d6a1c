#pragma once

// Dense univariate polynomials in z with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfjet {

class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(std::initializer_list<long> coeffs);
  explicit ZPoly(std::vector<mpz_class> coeffs);

  static ZPoly constant(const mpz_class& c);
  static ZPoly monomial(std::size_t e, const mpz_class& c = 1);
  /// (1 - z)^e
  static ZPoly one_minus_z_pow(std::size_t e);
  /// 1 + z + ... + z^{m-1}
  static ZPoly geometric(std::size_t m);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(std::size_t e) const { return e < c_.size() ? c_[e] : mpz_class(0); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  mpz_class eval(const mpz_class& z) const;
  mpz_class at_one() const;

  ZPoly pow(unsigned e) const;
  /// Exact quotient by (1 - z); throws std::domain_error unless p(1) == 0.
  ZPoly divide_one_minus_z() const;
  /// Exact quotient; throws std::domain_error when b does not divide.
  ZPoly exact_div(const ZPoly& b) const;
  /// p(z) / z^e; throws std::domain_error unless z^e divides p.
  ZPoly shift_down(std::size_t e) const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
  ZPoly& operator-=(const ZPoly& b) { return *this = *this - b; }
  ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }
  bool operator==(const ZPoly& b) const { return c_ == b.c_; }

 private:
  void trim();

  std::vector<mpz_class> c_;
};

/// "1 + 3z + z^2" style text.
std::string to_string(const ZPoly& p);

}  // namespace pfjet
