#include "pfjet/zpoly.hpp"

#include <stdexcept>

namespace pfjet {

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

ZPoly ZPoly::monomial(std::size_t e, const mpz_class& c) {
  std::vector<mpz_class> v(e + 1, 0);
  v[e] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::one_minus_z_pow(std::size_t e) {
  std::vector<mpz_class> v(e + 1);
  mpz_class b = 1;
  for (std::size_t i = 0; i <= e; ++i) {
    v[i] = (i % 2 == 0) ? b : mpz_class(-b);
    b = b * static_cast<unsigned long>(e - i) / static_cast<unsigned long>(i + 1);
  }
  return ZPoly(std::move(v));
}

ZPoly ZPoly::geometric(std::size_t m) { return ZPoly(std::vector<mpz_class>(m, 1)); }

std::size_t ZPoly::valuation() const {
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e] != 0) return e;
  }
  return 0;
}

mpz_class ZPoly::eval(const mpz_class& z) const {
  mpz_class acc = 0;
  for (std::size_t e = c_.size(); e-- > 0;) acc = acc * z + c_[e];
  return acc;
}

mpz_class ZPoly::at_one() const {
  mpz_class acc = 0;
  for (const auto& c : c_) acc += c;
  return acc;
}

ZPoly ZPoly::pow(unsigned e) const {
  ZPoly result = constant(1);
  ZPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

ZPoly ZPoly::divide_one_minus_z() const {
  if (at_one() != 0) throw std::domain_error("polynomial is not divisible by (1 - z)");
  if (is_zero()) return {};
  // p = (1 - z) q  =>  q_e = sum_{i <= e} p_i
  std::vector<mpz_class> q(c_.size() - 1);
  mpz_class run = 0;
  for (std::size_t e = 0; e + 1 < c_.size(); ++e) {
    run += c_[e];
    q[e] = run;
  }
  return ZPoly(std::move(q));
}

ZPoly ZPoly::exact_div(const ZPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(c_.size() - b.c_.size() + 1);
  const mpz_class& lead = b.c_.back();
  for (std::size_t e = q.size(); e-- > 0;) {
    const mpz_class& top = rem[e + b.c_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw std::domain_error("inexact polynomial division");
    q[e] = top / lead;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem[e + i] -= q[e] * b.c_[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division");
  }
  return ZPoly(std::move(q));
}

ZPoly ZPoly::shift_down(std::size_t e) const {
  if (is_zero()) return {};
  for (std::size_t i = 0; i < e && i < c_.size(); ++i) {
    if (c_[i] != 0) throw std::domain_error("z^" + std::to_string(e) + " does not divide the polynomial");
  }
  if (e >= c_.size()) return {};
  return ZPoly(std::vector<mpz_class>(c_.begin() + static_cast<std::ptrdiff_t>(e), c_.end()));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t e = 0; e < a.c_.size(); ++e) v[e] += a.c_[e];
  for (std::size_t e = 0; e < b.c_.size(); ++e) v[e] += b.c_[e];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    mpz_class c = p.coeffs()[e];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1 || e == 0) out += c.get_str();
    if (e >= 1) out += "z";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pfjet
