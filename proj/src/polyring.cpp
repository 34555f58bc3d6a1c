#include "pfjet/polyring.hpp"

#include <cctype>
#include <charconv>

namespace pfjet {

VarId VarId::jet(int i, int j, int h) {
  if (i < 1 || j <= i || h < 0) {
    throw std::invalid_argument("invalid jet variable x[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(h) + "]");
  }
  return VarId{i, j, h, -1};
}

VarId VarId::auxiliary(int index) {
  if (index < 0) throw std::invalid_argument("negative auxiliary index");
  return VarId{0, 0, 0, index};
}

std::string to_string(const VarId& v) {
  if (v.is_aux()) return v.aux == 0 ? "w" : "w" + std::to_string(v.aux);
  return "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.h) + "]";
}

MonomialOrder MonomialOrder::paper(std::size_t num_vars) {
  return MonomialOrder(Kind::paper_degrevlex, num_vars, 0);
}

MonomialOrder MonomialOrder::elimination(std::size_t num_vars, std::size_t first_block) {
  if (first_block > num_vars) throw std::invalid_argument("elimination block larger than the ring");
  return MonomialOrder(Kind::elimination_block, num_vars, first_block);
}

std::strong_ordering MonomialOrder::compare_blocks(const exponent* a, const exponent* b) const {
  unsigned da = 0, db = 0;
  for (std::size_t v = 1; v <= block_; ++v) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da <=> db;
  for (std::size_t v = block_; v >= 1; --v) {
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  const unsigned ra = a[0] - da, rb = b[0] - db;
  if (ra != rb) return ra <=> rb;
  for (std::size_t v = nvars_; v > block_; --v) {
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  return kind_ == Kind::paper_degrevlex ? "paper" : "elim(" + std::to_string(block_) + ")";
}

Ring::Ring(std::vector<VarId> vars, MonomialOrder order, int n, int k)
    : vars_(std::move(vars)), order_(order), n_(n), k_(k) {
  if (order_.num_vars() != vars_.size()) throw std::invalid_argument("order size does not match ring");
  for (std::size_t p = 0; p < vars_.size(); ++p) {
    if (!index_.emplace(vars_[p], p).second) {
      throw std::invalid_argument("duplicate variable " + pfjet::to_string(vars_[p]));
    }
  }
}

std::optional<std::size_t> Ring::position(const VarId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::require_position(const VarId& v) const {
  auto p = position(v);
  if (!p) throw RingMismatch("variable " + pfjet::to_string(v) + " is not in the ring");
  return *p;
}

std::size_t Ring::num_aux() const {
  return static_cast<std::size_t>(std::count_if(vars_.begin(), vars_.end(), [](const VarId& v) { return v.is_aux(); }));
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (vars_ == other.vars_ && order_ == other.order_);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw RingMismatch("operands belong to different rings");
}

RingPtr make_jet_ring(int n, int k) {
  if (n < 2) throw std::invalid_argument("jet ring needs n >= 2, got " + std::to_string(n));
  if (k < 1) throw std::invalid_argument("jet ring needs k >= 1, got " + std::to_string(k));
  std::vector<VarId> vars;
  vars.reserve(static_cast<std::size_t>(k) * n * (n - 1) / 2);
  for (int h = k - 1; h >= 0; --h) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::jet(i, j, h));
    }
  }
  const std::size_t count = vars.size();
  return std::make_shared<const Ring>(std::move(vars), MonomialOrder::paper(count), n, k);
}

RingPtr with_auxiliary(const RingPtr& base, int count) {
  if (count < 1) throw std::invalid_argument("need at least one auxiliary variable");
  std::vector<VarId> vars;
  int next = 0;
  for (const auto& v : base->vars()) {
    if (v.is_aux()) next = std::max(next, v.aux + 1);
  }
  for (int a = 0; a < count; ++a) vars.push_back(VarId::auxiliary(next + a));
  vars.insert(vars.end(), base->vars().begin(), base->vars().end());
  const std::size_t total = vars.size();
  return std::make_shared<const Ring>(std::move(vars),
                                      MonomialOrder::elimination(total, static_cast<std::size_t>(count) + base->num_aux()),
                                      base->n(), base->k());
}

RingPtr without_auxiliary(const RingPtr& ring) {
  std::vector<VarId> vars;
  for (const auto& v : ring->vars()) {
    if (!v.is_aux()) vars.push_back(v);
  }
  const std::size_t count = vars.size();
  return std::make_shared<const Ring>(std::move(vars), MonomialOrder::paper(count), ring->n(), ring->k());
}

RingPtr constant_ring() {
  static const RingPtr ring = std::make_shared<const Ring>(std::vector<VarId>{}, MonomialOrder::paper(0), 0, 0);
  return ring;
}

Monomial::Monomial(RingPtr ring) : ring_(std::move(ring)), data_(ring_->stride(), 0) {}

Monomial::Monomial(RingPtr ring, std::span<const exponent> packed_exponents)
    : ring_(std::move(ring)), data_(packed_exponents.begin(), packed_exponents.end()) {
  if (data_.size() != ring_->stride()) throw std::invalid_argument("packed monomial has wrong length");
  unsigned deg = 0;
  for (std::size_t v = 1; v < data_.size(); ++v) deg += data_[v];
  if (deg != data_[0]) throw std::invalid_argument("packed monomial degree mismatch");
}

Monomial Monomial::variable(RingPtr ring, const VarId& v, exponent e) {
  Monomial m(ring);
  m.data_[ring->require_position(v) + 1] = e;
  m.data_[0] = e;
  return m;
}

Monomial Monomial::from_powers(RingPtr ring, const std::vector<std::pair<VarId, exponent>>& powers) {
  Monomial m(ring);
  unsigned deg = 0;
  for (const auto& [v, e] : powers) {
    auto& slot = m.data_[ring->require_position(v) + 1];
    if (static_cast<unsigned>(slot) + e > 0xFFFFu) throw std::overflow_error("exponent overflow");
    slot = static_cast<exponent>(slot + e);
    deg += e;
  }
  if (deg > 0xFFFFu) throw std::overflow_error("monomial degree overflow");
  m.data_[0] = static_cast<exponent>(deg);
  return m;
}

exponent Monomial::exponent_of(const VarId& v) const {
  auto p = ring_->position(v);
  return p ? data_[*p + 1] : 0;
}

std::vector<std::pair<VarId, exponent>> Monomial::support() const {
  std::vector<std::pair<VarId, exponent>> s;
  for (std::size_t p = 0; p < ring_->num_vars(); ++p) {
    if (data_[p + 1] != 0) s.emplace_back(ring_->var(p), data_[p + 1]);
  }
  return s;
}

bool Monomial::operator==(const Monomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  return data_ == other.data_;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  Monomial r(a.ring_);
  packed::multiply(a.data(), b.data(), r.data_.data(), a.ring_->num_vars());
  return r;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  require_same_ring(*a.ring(), *b.ring());
  if (order.num_vars() != a.ring()->num_vars()) throw RingMismatch("order does not match the ring");
  return order.compare(a.data(), b.data());
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) { return compare(a, b, a.ring()->order()); }

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(*a.ring(), *b.ring());
  return packed::divides(a.data(), b.data(), a.ring()->num_vars());
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_ring(*a.ring(), *b.ring());
  return packed::coprime(a.data(), b.data(), a.ring()->num_vars());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<exponent> out(a.ring()->stride());
  packed::lcm(a.data(), b.data(), out.data(), a.ring()->num_vars());
  return Monomial(a.ring(), out);
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::domain_error("monomial quotient is not exact");
  std::vector<exponent> out(a.ring()->stride());
  packed::quotient(b.data(), a.data(), out.data(), a.ring()->num_vars());
  return Monomial(a.ring(), out);
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t p = 0; p < m.ring()->num_vars(); ++p) {
    const exponent e = m.exponent_at(p);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += to_string(m.ring()->var(p));
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial<Integers> to_primitive_integer(const Polynomial<Rationals>& f) {
  mpz_class den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  auto scaled = map_coefficients(f, Integers{}, [&](const mpq_class& c) { return mpz_class(c.get_num() * (den / c.get_den())); });
  return primitive_part(scaled);
}

Polynomial<Integers> primitive_part(const Polynomial<Integers>& f) {
  if (f.is_zero()) return f;
  mpz_class g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(f.leading_coefficient()) < 0) g = -g;
  if (g == 1) return f;
  return map_coefficients(f, Integers{}, [&](const mpz_class& c) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return q;
  });
}

Polynomial<Rationals> to_monic_rational(const Polynomial<Integers>& f) {
  if (f.is_zero()) return Polynomial<Rationals>(f.ring());
  const mpz_class lead = f.leading_coefficient();
  return map_coefficients(f, Rationals{}, [&](const mpz_class& c) {
    mpq_class q(c, lead);
    q.canonicalize();
    return q;
  });
}

Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const PrimeField& field) {
  return map_coefficients(f, field, [&](const mpq_class& c) { return field.from_ratio(c.get_num(), c.get_den()); });
}

namespace detail {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : s_(text) {}

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ParsedTerm t = term();
      t.negative = negative != t.negative;
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    // A lone "0" denotes the zero polynomial.
    if (terms.size() == 1 && terms[0].num == 0) terms.clear();
    return terms;
  }

 private:
  ParsedTerm term() {
    ParsedTerm t;
    factor(t);
    skip();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip();
      factor(t);
      skip();
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      t.num *= num;
      t.den *= den;
      return;
    }
    if (c == 'x') {
      ++pos_;
      expect('[');
      const int i = small_int();
      expect(',');
      const int j = small_int();
      expect(',');
      const int h = small_int();
      expect(']');
      if (i < 1 || j <= i) fail("variable needs 1 <= i < j");
      t.factors.emplace_back(VarId::jet(i, j, h), power());
      return;
    }
    if (c == 'w') {
      ++pos_;
      int idx = 0;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) idx = small_int();
      t.factors.emplace_back(VarId::auxiliary(idx), power());
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned power() {
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      return static_cast<unsigned>(small_int());
    }
    return 1;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  int small_int() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (start == pos_ || ec != std::errc{}) fail("expected small integer");
    (void)ptr;
    skip();
    return v;
  }

  void expect(char c) {
    skip();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text) { return TermParser(text).run(); }

}  // namespace detail

}  // namespace pfjet
