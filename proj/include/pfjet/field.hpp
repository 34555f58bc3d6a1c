#pragma once

// Coefficient domains. Every domain exposes the same element-level interface
// so polynomial code can be written once:
//
//   zero(), one(), from_int(long), is_zero(e), is_one(e), equal(a, b),
//   add(a, b), sub(a, b), mul(a, b), neg(a), to_string(e), tag()
//
// Fields additionally provide inv(a) and div(a, b).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfjet {

struct FieldTag {
  enum class Kind { rationals, integers, prime };
  Kind kind = Kind::rationals;
  std::uint32_t modulus = 0;

  bool operator==(const FieldTag&) const = default;
  std::string to_string() const;
};

/// Exact rationals backed by GMP.
class Rationals {
 public:
  using element = mpq_class;
  static constexpr bool is_field = true;

  element zero() const { return element(0); }
  element one() const { return element(1); }
  element from_int(long v) const { return element(v); }
  element from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const element& a) const { return sgn(a) == 0; }
  bool is_one(const element& a) const { return a == 1; }
  bool is_negative(const element& a) const { return sgn(a) < 0; }
  bool equal(const element& a, const element& b) const { return a == b; }

  element add(const element& a, const element& b) const { return a + b; }
  element sub(const element& a, const element& b) const { return a - b; }
  element mul(const element& a, const element& b) const { return a * b; }
  element neg(const element& a) const { return -a; }
  element inv(const element& a) const;
  element div(const element& a, const element& b) const { return mul(a, inv(b)); }

  std::string to_string(const element& a) const { return a.get_str(); }
  FieldTag tag() const { return {FieldTag::Kind::rationals, 0}; }

  bool operator==(const Rationals&) const = default;
};

/// Arbitrary-precision integers. Not a field: used for fraction-free
/// (content-normalized) Groebner computations over the rationals.
class Integers {
 public:
  using element = mpz_class;
  static constexpr bool is_field = false;

  element zero() const { return element(0); }
  element one() const { return element(1); }
  element from_int(long v) const { return element(v); }
  /// Only integral ratios are representable.
  element from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const element& a) const { return sgn(a) == 0; }
  bool is_one(const element& a) const { return a == 1; }
  bool is_negative(const element& a) const { return sgn(a) < 0; }
  bool equal(const element& a, const element& b) const { return a == b; }

  element add(const element& a, const element& b) const { return a + b; }
  element sub(const element& a, const element& b) const { return a - b; }
  element mul(const element& a, const element& b) const { return a * b; }
  element neg(const element& a) const { return -a; }

  std::string to_string(const element& a) const { return a.get_str(); }
  FieldTag tag() const { return {FieldTag::Kind::integers, 0}; }

  bool operator==(const Integers&) const = default;
};

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using element = std::uint32_t;
  static constexpr bool is_field = true;
  static constexpr std::uint32_t default_modulus = 32003;

  explicit PrimeField(std::uint32_t modulus = default_modulus);

  std::uint32_t modulus() const { return p_; }

  element zero() const { return 0; }
  element one() const { return 1; }
  element from_int(long v) const;
  element from_integer(const mpz_class& v) const;
  element from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(element a) const { return a == 0; }
  bool is_one(element a) const { return a == 1; }
  // Elements print in the symmetric range, so "negative" means a > p/2.
  bool is_negative(element a) const { return a > p_ / 2; }
  bool equal(element a, element b) const { return a == b; }

  element add(element a, element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  element sub(element a, element b) const { return a >= b ? a - b : a + p_ - b; }
  element mul(element a, element b) const {
    return static_cast<element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  element neg(element a) const { return a == 0 ? 0 : p_ - a; }
  element inv(element a) const;
  element div(element a, element b) const { return mul(a, inv(b)); }

  /// Symmetric representative, e.g. p-1 prints as -1.
  std::string to_string(element a) const;
  FieldTag tag() const { return {FieldTag::Kind::prime, p_}; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pfjet
