#include "pfjet/field.hpp"

namespace pfjet {

std::string FieldTag::to_string() const {
  switch (kind) {
    case Kind::rationals:
      return "q";
    case Kind::integers:
      return "z";
    case Kind::prime:
      return "p:" + std::to_string(modulus);
  }
  return "?";
}

Rationals::element Rationals::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  element r(num, den);
  r.canonicalize();
  return r;
}

Rationals::element Rationals::inv(const element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return 1 / a;
}

Integers::element Integers::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::domain_error("non-integral coefficient " + num.get_str() + "/" + den.get_str());
  }
  return num / den;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus >= (1u << 31) || !is_prime(modulus)) {
    throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                std::to_string(modulus));
  }
}

PrimeField::element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<element>(r);
}

PrimeField::element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (sgn(r) < 0) r += p_;
  return static_cast<element>(r.get_ui());
}

PrimeField::element PrimeField::from_ratio(const mpz_class& num, const mpz_class& den) const {
  element d = from_integer(den);
  if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  return div(from_integer(num), d);
}

PrimeField::element PrimeField::inv(element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<element>(t);
}

std::string PrimeField::to_string(element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

}  // namespace pfjet
