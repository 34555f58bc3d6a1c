#include "pfjet/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pfjet {

namespace {

using Mono = std::vector<exponent>;

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

unsigned degree(const Mono& a) {
  unsigned d = 0;
  for (exponent e : a) d += e;
  return d;
}

void minimalize(std::vector<Mono>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) { return degree(a) < degree(b); });
  std::vector<Mono> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  gens = std::move(kept);
}

std::vector<Mono> unpack(const MonomialIdeal& ideal) {
  const std::size_t nv = ideal.ring()->num_vars();
  std::vector<Mono> out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.data() + 1, g.data() + 1 + nv);
  return out;
}

ZPoly numerator(std::vector<Mono> gens, std::size_t nv) {
  if (gens.empty()) return ZPoly::constant(1);
  for (const auto& g : gens) {
    if (degree(g) == 0) return {};
  }
  std::vector<int> count(nv, 0);
  bool coprime = true;
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (g[v] == 0) continue;
      if (++count[v] > 1) coprime = false;
    }
  }
  if (coprime) {
    ZPoly out = ZPoly::constant(1);
    for (const auto& g : gens) out *= ZPoly::constant(1) - ZPoly::monomial(degree(g));
    return out;
  }
  std::size_t pivot = 0;
  for (std::size_t v = 1; v < nv; ++v) {
    if (count[v] > count[pivot]) pivot = v;
  }
  exponent e = 0;
  for (const auto& g : gens) {
    if (g[pivot] != 0 && (e == 0 || g[pivot] < e)) e = g[pivot];
  }

  std::vector<Mono> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Mono q = g;
    q[pivot] = static_cast<exponent>(q[pivot] > e ? q[pivot] - e : 0);
    colon.push_back(std::move(q));
  }
  minimalize(colon);

  Mono m(nv, 0);
  m[pivot] = e;
  std::vector<Mono> sum;
  sum.reserve(gens.size() + 1);
  for (auto& g : gens) {
    if (!divides(m, g)) sum.push_back(std::move(g));
  }
  sum.push_back(std::move(m));

  return numerator(std::move(sum), nv) + ZPoly::monomial(e) * numerator(std::move(colon), nv);
}

std::size_t min_cover(const std::vector<Mono>& gens, std::size_t nv) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : gens) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < nv; ++v) {
      if (g[v] != 0) s.push_back(v);
    }
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<char> chosen(nv, 0);
  std::size_t best = nv + 1;
  std::function<void(std::size_t)> search = [&](std::size_t used) {
    if (used >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      bool hit = false;
      for (std::size_t v : s) {
        if (chosen[v]) {
          hit = true;
          break;
        }
      }
      if (!hit && (!open || s.size() < open->size())) open = &s;
    }
    if (!open) {
      best = used;
      return;
    }
    if (used + 1 >= best) return;
    for (std::size_t v : *open) {
      chosen[v] = 1;
      search(used + 1);
      chosen[v] = 0;
    }
  };
  search(0);
  return best;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  while (!out.numerator.is_zero() && out.denominator_exp > 0 && out.numerator.at_one() == 0) {
    out.numerator = out.numerator.divide_one_minus_z();
    --out.denominator_exp;
  }
  return out;
}

std::size_t HilbertSeries::dimension() const {
  if (numerator.is_zero()) throw std::invalid_argument("the unit ideal has no dimension");
  return reduced().denominator_exp;
}

mpz_class HilbertSeries::multiplicity() const {
  if (!is_reduced()) throw std::invalid_argument("multiplicity needs a reduced Hilbert series");
  if (numerator.is_zero()) throw std::invalid_argument("the unit ideal has no multiplicity");
  return numerator.at_one();
}

mpz_class HilbertSeries::coefficient(std::size_t degree) const {
  mpz_class total = 0;
  const auto& c = numerator.coeffs();
  for (std::size_t i = 0; i < c.size() && i <= degree; ++i) {
    if (denominator_exp == 0) {
      if (i == degree) total += c[i];
      continue;
    }
    const long d = static_cast<long>(denominator_exp);
    total += c[i] * binomial(static_cast<long>(degree - i) + d - 1, d - 1);
  }
  return total;
}

std::string to_string(const HilbertSeries& h) {
  return "(" + to_string(h.numerator) + ") / (1 - z)^" + std::to_string(h.denominator_exp);
}

ZPoly hilbert_numerator(const MonomialIdeal& ideal) {
  return numerator(unpack(ideal), ideal.ring()->num_vars());
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  const std::size_t nv = ideal.ring()->num_vars();
  return {hilbert_numerator(ideal), nv, nv};
}

std::size_t dimension(const MonomialIdeal& ideal) { return ideal.ring()->num_vars() - codimension(ideal); }

std::size_t codimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has no dimension");
  if (ideal.is_zero()) return 0;
  return min_cover(unpack(ideal), ideal.ring()->num_vars());
}

mpz_class standard_monomial_count(const MonomialIdeal& ideal, std::size_t degree, std::size_t limit) {
  const std::size_t nv = ideal.ring()->num_vars();
  if (nv == 0) return degree == 0 ? (ideal.is_unit() ? 0 : 1) : 0;
  const mpz_class total = binomial(static_cast<long>(nv + degree - 1), static_cast<long>(degree));
  if (total > static_cast<unsigned long>(limit)) {
    throw std::length_error("standard monomial enumeration would visit " + total.get_str() + " monomials");
  }
  const auto gens = unpack(ideal);
  Mono cur(nv, 0);
  mpz_class count = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t left) {
    if (v + 1 == nv) {
      cur[v] = static_cast<exponent>(left);
      bool inside = false;
      for (const auto& g : gens) {
        if (divides(g, cur)) {
          inside = true;
          break;
        }
      }
      if (!inside) ++count;
      cur[v] = 0;
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<exponent>(e);
      walk(v + 1, left - e);
    }
    cur[v] = 0;
  };
  walk(0, degree);
  return count;
}

}  // namespace pfjet
