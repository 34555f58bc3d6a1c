#include "pfjet/witness.hpp"

namespace pfjet {

namespace {

using Series = std::vector<std::uint32_t>;

Series mul(const Series& a, const Series& b, const PrimeField& f) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

Series inverse(const Series& a, const PrimeField& f) {
  Series out(a.size(), 0);
  const auto inv0 = f.inv(a[0]);
  out[0] = inv0;
  for (std::size_t m = 1; m < a.size(); ++m) {
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc = f.add(acc, f.mul(a[i], out[m - i]));
    out[m] = f.neg(f.mul(inv0, acc));
  }
  return out;
}

}  // namespace

JetPoint<PrimeField> sample_u56_point(int k, std::mt19937_64& rng, const PrimeField& field, int max_tries) {
  if (k < 1) throw std::invalid_argument("sampler needs k >= 1");
  std::uniform_int_distribution<std::uint32_t> draw(0, field.modulus() - 1);
  const std::size_t len = static_cast<std::size_t>(k);
  auto random_series = [&] {
    Series s(len);
    for (auto& c : s) c = draw(rng);
    return s;
  };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Series x56 = random_series();
    if (x56[0] == 0) continue;
    std::vector<Series> c5(5), c6(5);
    for (std::size_t i = 1; i <= 4; ++i) {
      c5[i] = random_series();
      c6[i] = random_series();
    }
    const Series inv56 = inverse(x56, field);
    JetPoint<PrimeField> p(6, k, field);
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = i + 1; j <= 4; ++j) {
        // pf[i,j,5,6] = x_ij x_56 - x_i5 x_j6 + x_i6 x_j5 vanishes mod t^k
        Series num = mul(c5[i], c6[j], field);
        const Series other = mul(c6[i], c5[j], field);
        for (std::size_t h = 0; h < len; ++h) num[h] = field.sub(num[h], other[h]);
        p.set(i, j, mul(num, inv56, field));
      }
      p.set(i, 5, c5[i]);
      p.set(i, 6, c6[i]);
    }
    p.set(5, 6, x56);
    if (on_variety(p, 2)) return p;
  }
  throw std::runtime_error("sampler found no point on the variety in " + std::to_string(max_tries) + " tries");
}

}  // namespace pfjet
