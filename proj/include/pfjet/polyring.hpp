#pragma once

// Sparse multivariate polynomials over the jet variables x[i,j,h].
//
// Variables are kept in a dense rank order (position 0 is the largest
// variable). A monomial is packed as [total degree, e_0, ..., e_{N-1}] so
// that order comparison and divisibility are plain integer scans.

#include "pfjet/field.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfjet {

using exponent = std::uint16_t;

/// A jet variable x[i,j,h] (1 <= i < j <= n, 0 <= h < k), or an auxiliary
/// elimination variable such as the saturation variable w.
struct VarId {
  int i = 0;
  int j = 0;
  int h = 0;
  int aux = -1;

  static VarId jet(int i, int j, int h);
  static VarId auxiliary(int index = 0);
  bool is_aux() const { return aux >= 0; }

  auto operator<=>(const VarId&) const = default;
};

std::string to_string(const VarId& v);

class MonomialOrder {
 public:
  enum class Kind { paper_degrevlex, elimination_block };

  /// Graded reverse lexicographic order on the rank order of the ring.
  static MonomialOrder paper(std::size_t num_vars);
  /// Two degrevlex blocks; the first `first_block` positions are eliminated.
  static MonomialOrder elimination(std::size_t num_vars, std::size_t first_block);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return nvars_; }
  std::size_t first_block() const { return block_; }
  bool is_degree_compatible() const { return kind_ == Kind::paper_degrevlex || block_ == 0; }

  std::strong_ordering compare(const exponent* a, const exponent* b) const {
    if (kind_ == Kind::paper_degrevlex) {
      if (a[0] != b[0]) return a[0] <=> b[0];
      for (std::size_t v = nvars_; v >= 1; --v) {
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
      return std::strong_ordering::equal;
    }
    return compare_blocks(a, b);
  }

  std::string name() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t nvars, std::size_t block)
      : kind_(kind), nvars_(nvars), block_(block) {}
  std::strong_ordering compare_blocks(const exponent* a, const exponent* b) const;

  Kind kind_;
  std::size_t nvars_;
  std::size_t block_;
};

/// Variable inventory plus the active monomial order.
class Ring {
 public:
  Ring(std::vector<VarId> vars, MonomialOrder order, int n, int k);

  std::size_t num_vars() const { return vars_.size(); }
  std::size_t stride() const { return vars_.size() + 1; }
  const VarId& var(std::size_t pos) const { return vars_.at(pos); }
  const std::vector<VarId>& vars() const { return vars_; }
  std::optional<std::size_t> position(const VarId& v) const;
  std::size_t require_position(const VarId& v) const;
  const MonomialOrder& order() const { return order_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t num_aux() const;

  bool same_as(const Ring& other) const;

 private:
  std::vector<VarId> vars_;
  std::map<VarId, std::size_t> index_;
  MonomialOrder order_;
  int n_;
  int k_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// k*n(n-1)/2 jet variables ranked by h descending, then row-major (i,j).
RingPtr make_jet_ring(int n, int k);
/// Prepends `count` auxiliary variables and switches to the elimination order.
RingPtr with_auxiliary(const RingPtr& base, int count = 1);
/// Same variables without the auxiliary ones, paper order.
RingPtr without_auxiliary(const RingPtr& ring);
/// Ring with no variables, for scalar arithmetic through the polynomial type.
RingPtr constant_ring();

void require_same_ring(const Ring& a, const Ring& b);

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace packed {

inline bool divides(const exponent* a, const exponent* b, std::size_t nvars) {
  if (a[0] > b[0]) return false;
  for (std::size_t v = 1; v <= nvars; ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

inline void multiply(const exponent* a, const exponent* b, exponent* out, std::size_t nvars) {
  if (static_cast<unsigned>(a[0]) + b[0] > 0xFFFFu) throw std::overflow_error("monomial degree overflow");
  for (std::size_t v = 0; v <= nvars; ++v) out[v] = static_cast<exponent>(a[v] + b[v]);
}

/// out = b / a; requires divides(a, b).
inline void quotient(const exponent* b, const exponent* a, exponent* out, std::size_t nvars) {
  for (std::size_t v = 0; v <= nvars; ++v) out[v] = static_cast<exponent>(b[v] - a[v]);
}

inline void lcm(const exponent* a, const exponent* b, exponent* out, std::size_t nvars) {
  unsigned deg = 0;
  for (std::size_t v = 1; v <= nvars; ++v) {
    out[v] = std::max(a[v], b[v]);
    deg += out[v];
  }
  if (deg > 0xFFFFu) throw std::overflow_error("monomial degree overflow");
  out[0] = static_cast<exponent>(deg);
}

inline bool coprime(const exponent* a, const exponent* b, std::size_t nvars) {
  for (std::size_t v = 1; v <= nvars; ++v) {
    if (a[v] != 0 && b[v] != 0) return false;
  }
  return true;
}

/// Support bitmask folded to 64 bits; (mask(a) & ~mask(b)) != 0 implies a does not divide b.
inline std::uint64_t mask(const exponent* a, std::size_t nvars) {
  std::uint64_t m = 0;
  for (std::size_t v = 1; v <= nvars; ++v) {
    if (a[v] != 0) m |= std::uint64_t{1} << ((v - 1) & 63);
  }
  return m;
}

inline bool equal(const exponent* a, const exponent* b, std::size_t nvars) {
  return std::equal(a, a + nvars + 1, b);
}

}  // namespace packed

class Monomial {
 public:
  explicit Monomial(RingPtr ring);
  Monomial(RingPtr ring, std::span<const exponent> packed_exponents);

  static Monomial variable(RingPtr ring, const VarId& v, exponent e = 1);
  static Monomial from_powers(RingPtr ring, const std::vector<std::pair<VarId, exponent>>& powers);

  const RingPtr& ring() const { return ring_; }
  exponent degree() const { return data_[0]; }
  exponent exponent_at(std::size_t pos) const { return data_[pos + 1]; }
  exponent exponent_of(const VarId& v) const;
  const exponent* data() const { return data_.data(); }
  std::span<const exponent> packed_exponents() const { return data_; }
  std::vector<std::pair<VarId, exponent>> support() const;
  bool is_one() const { return data_[0] == 0; }

  bool operator==(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

 private:
  RingPtr ring_;
  std::vector<exponent> data_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);
std::strong_ordering compare(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// b / a; throws unless a divides b.
Monomial quotient(const Monomial& b, const Monomial& a);
std::string to_string(const Monomial& m);

/// Exact sparse polynomial. Terms are stored in descending order under the
/// ring's monomial order with no zero coefficients.
template <class F>
class Polynomial {
 public:
  using element = typename F::element;

  explicit Polynomial(RingPtr ring, F field = F{})
      : ring_(std::move(ring)), field_(std::move(field)) {}

  static Polynomial constant(RingPtr ring, F field, const element& c) {
    Polynomial p(ring, field);
    if (!p.field_.is_zero(c)) {
      p.exps_.assign(p.stride(), 0);
      p.coeffs_.push_back(c);
    }
    return p;
  }

  static Polynomial variable(RingPtr ring, F field, const VarId& v) {
    return term(Monomial::variable(ring, v), field, field.one());
  }

  static Polynomial term(const Monomial& m, F field, const element& c) {
    Polynomial p(m.ring(), field);
    if (!p.field_.is_zero(c)) {
      p.exps_.assign(m.packed_exponents().begin(), m.packed_exponents().end());
      p.coeffs_.push_back(c);
    }
    return p;
  }

  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, F field, const std::vector<std::pair<Monomial, element>>& terms) {
    Polynomial p(ring, field);
    std::vector<exponent> raw;
    std::vector<element> coeffs;
    raw.reserve(terms.size() * p.stride());
    for (const auto& [m, c] : terms) {
      require_same_ring(*m.ring(), *ring);
      raw.insert(raw.end(), m.packed_exponents().begin(), m.packed_exponents().end());
      coeffs.push_back(c);
    }
    p.assign_unsorted(std::move(raw), std::move(coeffs));
    return p;
  }

  /// Adopts packed data that is already canonical (descending, no zeros).
  static Polynomial from_sorted(RingPtr ring, F field, std::vector<exponent> raw, std::vector<element> coeffs) {
    Polynomial p(std::move(ring), std::move(field));
    p.exps_ = std::move(raw);
    p.coeffs_ = std::move(coeffs);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const F& field() const { return field_; }
  std::size_t stride() const { return ring_->stride(); }
  std::size_t num_vars() const { return ring_->num_vars(); }

  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (size() == 1 && exps_[0] == 0); }

  const exponent* term_data(std::size_t t) const { return exps_.data() + t * stride(); }
  Monomial term_monomial(std::size_t t) const {
    return Monomial(ring_, std::span<const exponent>(term_data(t), stride()));
  }
  const element& coefficient(std::size_t t) const { return coeffs_[t]; }

  Monomial leading_monomial() const {
    if (is_zero()) throw std::logic_error("leading monomial of zero polynomial");
    return term_monomial(0);
  }
  const element& leading_coefficient() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_[0];
  }

  int total_degree() const {
    int d = -1;
    for (std::size_t t = 0; t < size(); ++t) d = std::max<int>(d, term_data(t)[0]);
    return d;
  }

  bool is_homogeneous() const {
    for (std::size_t t = 1; t < size(); ++t) {
      if (term_data(t)[0] != exps_[0]) return false;
    }
    return true;
  }

  /// Coefficient of a monomial (zero when absent).
  element coefficient_of(const Monomial& m) const {
    require_same_ring(*m.ring(), *ring_);
    for (std::size_t t = 0; t < size(); ++t) {
      if (packed::equal(term_data(t), m.data(), num_vars())) return coeffs_[t];
    }
    return field_.zero();
  }

  bool uses_variable(std::size_t pos) const {
    for (std::size_t t = 0; t < size(); ++t) {
      if (term_data(t)[pos + 1] != 0) return true;
    }
    return false;
  }

  const std::vector<exponent>& raw_exponents() const { return exps_; }
  const std::vector<element>& coefficients() const { return coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
  }

  Polynomial scaled(const element& c) const {
    Polynomial r(ring_, field_);
    if (field_.is_zero(c)) return r;
    r.exps_ = exps_;
    r.coeffs_.reserve(size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(field_.mul(a, c));
    if constexpr (!F::is_field) r.drop_zeros();
    return r;
  }

  /// c * m * this
  Polynomial shifted(const Monomial& m, const element& c) const {
    require_same_ring(*m.ring(), *ring_);
    Polynomial r = scaled(c);
    const std::size_t s = stride();
    for (std::size_t t = 0; t < r.size(); ++t) {
      packed::multiply(r.exps_.data() + t * s, m.data(), r.exps_.data() + t * s, num_vars());
    }
    return r;
  }

  /// Exact division by a monomial dividing every term.
  Polynomial divided_by(const Monomial& m) const {
    require_same_ring(*m.ring(), *ring_);
    Polynomial r = *this;
    const std::size_t s = stride();
    for (std::size_t t = 0; t < r.size(); ++t) {
      exponent* e = r.exps_.data() + t * s;
      if (!packed::divides(m.data(), e, num_vars())) {
        throw std::domain_error("monomial does not divide polynomial");
      }
      packed::quotient(e, m.data(), e, num_vars());
    }
    return r;
  }

  /// Leading coefficient 1 (fields only).
  Polynomial monic() const
    requires F::is_field
  {
    if (is_zero()) return *this;
    return scaled(field_.inv(coeffs_[0]));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial r(a.ring_, a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t s = a.stride();
    std::vector<exponent> raw(a.size() * b.size() * s);
    std::vector<element> coeffs;
    coeffs.reserve(a.size() * b.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j, ++idx) {
        packed::multiply(a.term_data(i), b.term_data(j), raw.data() + idx * s, a.num_vars());
        coeffs.push_back(a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    r.assign_unsorted(std::move(raw), std::move(coeffs));
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  bool operator==(const Polynomial& b) const {
    require_compatible(b);
    if (size() != b.size() || exps_ != b.exps_) return false;
    for (std::size_t t = 0; t < size(); ++t) {
      if (!field_.equal(coeffs_[t], b.coeffs_[t])) return false;
    }
    return true;
  }

  void require_compatible(const Polynomial& b) const {
    require_same_ring(*ring_, *b.ring_);
    if (!(field_ == b.field_)) {
      throw FieldMismatch("polynomials over different coefficient fields (" + field_.tag().to_string() +
                          " vs " + b.field_.tag().to_string() + ")");
    }
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.require_compatible(b);
    const F& fld = a.field_;
    const std::size_t s = a.stride();
    const MonomialOrder& ord = a.ring_->order();
    Polynomial r(a.ring_, fld);
    r.exps_.reserve((a.size() + b.size()) * s);
    r.coeffs_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const exponent* e, element c) {
      r.exps_.insert(r.exps_.end(), e, e + s);
      r.coeffs_.push_back(std::move(c));
    };
    while (i < a.size() || j < b.size()) {
      std::strong_ordering cmp = std::strong_ordering::greater;
      if (i == a.size()) {
        cmp = std::strong_ordering::less;
      } else if (j < b.size()) {
        cmp = ord.compare(a.term_data(i), b.term_data(j));
      }
      if (cmp > 0) {
        push(a.term_data(i), a.coeffs_[i]);
        ++i;
      } else if (cmp < 0) {
        push(b.term_data(j), subtract ? fld.neg(b.coeffs_[j]) : b.coeffs_[j]);
        ++j;
      } else {
        element c = subtract ? fld.sub(a.coeffs_[i], b.coeffs_[j]) : fld.add(a.coeffs_[i], b.coeffs_[j]);
        if (!fld.is_zero(c)) push(a.term_data(i), std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void assign_unsorted(std::vector<exponent> raw, std::vector<element> coeffs) {
    const std::size_t s = stride();
    const std::size_t count = coeffs.size();
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    const MonomialOrder& ord = ring_->order();
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return ord.compare(raw.data() + x * s, raw.data() + y * s) > 0;
    });
    exps_.clear();
    coeffs_.clear();
    for (std::size_t t = 0; t < count;) {
      const exponent* e = raw.data() + idx[t] * s;
      element c = coeffs[idx[t]];
      std::size_t u = t + 1;
      while (u < count && packed::equal(raw.data() + idx[u] * s, e, num_vars())) {
        c = field_.add(c, coeffs[idx[u]]);
        ++u;
      }
      if (!field_.is_zero(c)) {
        exps_.insert(exps_.end(), e, e + s);
        coeffs_.push_back(std::move(c));
      }
      t = u;
    }
  }

  void drop_zeros() {
    const std::size_t s = stride();
    std::size_t out = 0;
    for (std::size_t t = 0; t < size(); ++t) {
      if (field_.is_zero(coeffs_[t])) continue;
      if (out != t) {
        std::copy_n(exps_.begin() + t * s, s, exps_.begin() + out * s);
        coeffs_[out] = std::move(coeffs_[t]);
      }
      ++out;
    }
    exps_.resize(out * s);
    coeffs_.resize(out);
  }

  RingPtr ring_;
  F field_;
  std::vector<exponent> exps_;
  std::vector<element> coeffs_;
};

/// Rewrites a polynomial into another ring sharing the variables it uses.
template <class F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr& target) {
  const Ring& src = *f.ring();
  std::vector<std::size_t> map(src.num_vars());
  for (std::size_t v = 0; v < src.num_vars(); ++v) {
    auto pos = target->position(src.var(v));
    map[v] = pos ? *pos : static_cast<std::size_t>(-1);
  }
  std::vector<std::pair<Monomial, typename F::element>> terms;
  terms.reserve(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    std::vector<exponent> e(target->stride(), 0);
    const exponent* s = f.term_data(t);
    e[0] = s[0];
    for (std::size_t v = 0; v < src.num_vars(); ++v) {
      if (s[v + 1] == 0) continue;
      if (map[v] == static_cast<std::size_t>(-1)) {
        throw RingMismatch("variable " + to_string(src.var(v)) + " is not in the target ring");
      }
      e[map[v] + 1] = s[v + 1];
    }
    terms.emplace_back(Monomial(target, e), f.coefficient(t));
  }
  return Polynomial<F>::from_terms(target, f.field(), terms);
}

/// Applies a coefficient map into another domain, dropping terms that map to zero.
template <class To, class From, class Fn>
Polynomial<To> map_coefficients(const Polynomial<From>& f, To field, Fn&& fn) {
  std::vector<exponent> raw;
  std::vector<typename To::element> coeffs;
  raw.reserve(f.raw_exponents().size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto c = fn(f.coefficient(t));
    if (field.is_zero(c)) continue;
    raw.insert(raw.end(), f.term_data(t), f.term_data(t) + f.stride());
    coeffs.push_back(std::move(c));
  }
  return Polynomial<To>::from_sorted(f.ring(), std::move(field), std::move(raw), std::move(coeffs));
}

/// Primitive integer multiple with positive leading coefficient.
Polynomial<Integers> to_primitive_integer(const Polynomial<Rationals>& f);
Polynomial<Integers> primitive_part(const Polynomial<Integers>& f);
/// Monic rational polynomial proportional to f.
Polynomial<Rationals> to_monic_rational(const Polynomial<Integers>& f);
/// Reduction modulo p of a rational polynomial.
Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const PrimeField& field);

/// Text form: terms in descending order separated by " + " / " - ",
/// factors as x[i,j,h]^e joined by '*', coefficients as a/b.
template <class F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const F& fld = f.field();
  std::string out;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const auto& c = f.coefficient(t);
    const bool negative = fld.is_negative(c);
    const auto magnitude = negative ? fld.neg(c) : c;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial m = f.term_monomial(t);
    if (m.is_one()) {
      out += fld.to_string(magnitude);
    } else {
      if (!fld.is_one(magnitude)) out += fld.to_string(magnitude) + "*";
      out += to_string(m);
    }
  }
  return out;
}

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct ParsedTerm {
  bool negative = false;
  mpz_class num = 1;
  mpz_class den = 1;
  std::vector<std::pair<VarId, unsigned>> factors;
};

std::vector<ParsedTerm> parse_terms(std::string_view text);

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr& ring, F field = F{}) {
  std::vector<std::pair<Monomial, typename F::element>> terms;
  for (const auto& pt : detail::parse_terms(text)) {
    std::vector<std::pair<VarId, exponent>> powers;
    for (const auto& [v, e] : pt.factors) {
      if (!ring->position(v)) throw ParseError("variable " + to_string(v) + " is not in the ring");
      if (e > 0xFFFFu) throw ParseError("exponent too large");
      powers.emplace_back(v, static_cast<exponent>(e));
    }
    auto c = field.from_ratio(pt.negative ? mpz_class(-pt.num) : pt.num, pt.den);
    terms.emplace_back(Monomial::from_powers(ring, powers), c);
  }
  return Polynomial<F>::from_terms(ring, field, terms);
}

}  // namespace pfjet
