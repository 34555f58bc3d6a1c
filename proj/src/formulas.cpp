#include "pfjet/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfjet {

namespace {

void require_params(int n, int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1, got " + std::to_string(r));
  if (2 * r > n) throw std::invalid_argument("need 2r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
}

BinomialTable& table() {
  static BinomialTable t;
  return t;
}

template <class T>
T bareiss(std::vector<std::vector<T>> m, const T& one, auto&& is_zero, auto&& exact_div) {
  const std::size_t size = m.size();
  for (const auto& row : m) {
    if (row.size() != size) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (size == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t c = 0; c + 1 < size; ++c) {
    if (is_zero(m[c][c])) {
      std::size_t swap_row = c + 1;
      while (swap_row < size && is_zero(m[swap_row][c])) ++swap_row;
      if (swap_row == size) return T{};
      std::swap(m[c], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < size; ++i) {
      for (std::size_t j = c + 1; j < size; ++j) {
        m[i][j] = exact_div(m[c][c] * m[i][j] - m[i][c] * m[c][j], prev);
      }
      m[i][c] = T{};
    }
    prev = m[c][c];
  }
  T det = m[size - 1][size - 1];
  return negate ? T(-det) : det;
}

}  // namespace

mpz_class BinomialTable::operator()(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard lock(mu_);
  auto [it, fresh] = cache_.try_emplace({n, k});
  if (fresh) mpz_bin_uiui(it->second.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return it->second;
}

mpz_class binomial(long n, long k) { return table()(n, k); }

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  return bareiss<mpz_class>(
      std::move(m), mpz_class(1), [](const mpz_class& x) { return x == 0; },
      [](const mpz_class& a, const mpz_class& b) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      });
}

ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
  return bareiss<ZPoly>(
      std::move(m), ZPoly::constant(1), [](const ZPoly& x) { return x.is_zero(); },
      [](const ZPoly& a, const ZPoly& b) { return a.exact_div(b); });
}

long classical_dimension(int n, int r) {
  require_params(n, r);
  return static_cast<long>(r - 1) * (2L * n - 2L * r + 1);
}

mpz_class classical_multiplicity(int n, int r) {
  require_params(n, r);
  const long top = 2L * n - 4L * r + 2;
  const long base = n - 2L * r;
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(r - 1), std::vector<mpz_class>(static_cast<std::size_t>(r - 1)));
  for (long i = 1; i <= r - 1; ++i) {
    for (long j = 1; j <= r - 1; ++j) {
      m[i - 1][j - 1] = binomial(top, base - i + j + 1) - binomial(top, base - i - j + 1);
    }
  }
  return bareiss_determinant(std::move(m));
}

HilbertSeries classical_hilbert_series(int n, int r) {
  require_params(n, r);
  const long base = n - 2L * r;
  std::vector<std::vector<ZPoly>> m(static_cast<std::size_t>(r - 1), std::vector<ZPoly>(static_cast<std::size_t>(r - 1)));
  for (long i = 1; i <= r - 1; ++i) {
    for (long j = 1; j <= r - 1; ++j) {
      std::vector<mpz_class> c;
      for (long e = 0; e <= n + 1; ++e) {
        c.push_back(binomial(base + j, e) * binomial(base + i, e) - binomial(base + j + i - 1, e - 1) * binomial(base + 1, e + 1));
      }
      m[i - 1][j - 1] = ZPoly(std::move(c));
    }
  }
  const ZPoly det = bareiss_determinant(std::move(m));
  const long shift = (r - 1) * (r - 2) / 2;
  ZPoly num;
  try {
    num = det.shift_down(static_cast<std::size_t>(shift));
  } catch (const std::domain_error&) {
    throw std::logic_error("classical Hilbert series: determinant not divisible by z^" + std::to_string(shift));
  }
  const std::size_t ambient = static_cast<std::size_t>(n) * (n - 1) / 2;
  return {num, static_cast<std::size_t>(classical_dimension(n, r)), ambient};
}

HilbertSeries ci_hilbert_series(int n, int k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("complete-intersection series needs n = 2r, got n=" + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int r = n / 2;
  const std::size_t per_level = static_cast<std::size_t>(n) * (n - 1) / 2;
  return {ZPoly::geometric(static_cast<std::size_t>(r)).pow(static_cast<unsigned>(k)),
          static_cast<std::size_t>(k) * (per_level - 1), static_cast<std::size_t>(k) * per_level};
}

std::vector<Monomial> ci_leading_terms(int n, int k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("leading terms formula needs n = 2r, got n=" + std::to_string(n));
  const int r = n / 2;
  const RingPtr ring = make_jet_ring(n, k);
  std::vector<Monomial> out;
  for (int h = 0; h < k; ++h) {
    const int q = h / r;
    const int t = h % r;
    std::vector<std::pair<VarId, exponent>> factors;
    for (int a = 1; a <= r - t; ++a) factors.emplace_back(VarId::jet(a, 2 * r - 2 * t + 1 - a, q), 1);
    for (int b = 1; b <= t; ++b) factors.emplace_back(VarId::jet(2 * r - 2 * t + b, 2 * r + 1 - b, q + 1), 1);
    out.push_back(Monomial::from_powers(ring, factors));
  }
  return out;
}

std::optional<long> predicted_codim(int n, int k, int r) {
  require_params(n, r);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n == 2 * r) return k;
  if (n == 2 * r + 1) return 3L * k;
  if (r == 2 && n >= 6) {
    if (k == 1) return static_cast<long>(n) * (n - 1) / 2 - classical_dimension(n, r);
    const auto report = component_codims_r2(n, k);
    long best = report.components.front().codim;
    for (const auto& c : report.components) best = std::min(best, c.codim);
    return best;
  }
  return std::nullopt;
}

ComponentReport component_codims_r2(int n, int k) {
  if (n < 6) throw std::invalid_argument("component codimensions need n >= 6, got " + std::to_string(n));
  if (k < 2) throw std::invalid_argument("component codimensions need k >= 2, got " + std::to_string(k));
  const long l = k / 2;
  const long big = static_cast<long>(n) * (n - 1) / 2;
  const long small = static_cast<long>(n - 2) * (n - 3) / 2;
  ComponentReport rep;
  rep.n = n;
  rep.k = k;
  rep.r = 2;
  for (long s = 0; s < l; ++s) rep.components.push_back({"Z" + std::to_string(s), (k - 2 * s) * small + s * big});
  rep.components.push_back({"Y" + std::to_string(l - 1), l * big + (k % 2 == 1 ? small : 0)});
  const auto best = std::min_element(rep.components.begin(), rep.components.end(),
                                     [](const ComponentCodim& a, const ComponentCodim& b) { return a.codim < b.codim; });
  rep.smallest = best->label;
  rep.pure = std::all_of(rep.components.begin(), rep.components.end(),
                         [&](const ComponentCodim& c) { return c.codim == rep.components.front().codim; });
  const auto bound = component_count_lower_bound(n, k, 2);
  rep.count_lower_bound = bound.value;
  rep.count_exact = bound.exact;
  return rep;
}

ComponentBound component_count_lower_bound(int n, int k, int r) {
  require_params(n, r);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n <= 2 * r + 1 || r == 1 || k == 1) return {1, false};
  if (n <= 2 * r + 3) return {2, false};
  return {k / 2 + 1, r == 2 && n >= 8};
}

}  // namespace pfjet
