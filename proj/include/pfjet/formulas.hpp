#pragma once

// Closed-form invariants of pfaffian varieties and their jet schemes, and
// predictors for codimension and component structure.

#include "pfjet/hilbert.hpp"
#include "pfjet/polyring.hpp"
#include "pfjet/zpoly.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pfjet {

/// Memoized exact binomial coefficients; C(n,k) = 0 outside 0 <= k <= n.
class BinomialTable {
 public:
  mpz_class operator()(long n, long k);

 private:
  std::mutex mu_;
  std::map<std::pair<long, long>, mpz_class> cache_;
};

mpz_class binomial(long n, long k);

/// Determinant by fraction-free elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);
ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m);

/// Dimension of the variety of skew n x n matrices of rank < 2r: (r-1)(2n-2r+1).
long classical_dimension(int n, int r);
mpz_class classical_multiplicity(int n, int r);
/// Reduced Hilbert series of the classical pfaffian quotient.
HilbertSeries classical_hilbert_series(int n, int r);

/// Reduced series (1 + z + ... + z^{r-1})^k / (1 - z)^{k(n(n-1)/2 - 1)} for n = 2r.
HilbertSeries ci_hilbert_series(int n, int k);
/// Leading monomials of the k generators for n = 2r, in make_jet_ring(n, k).
std::vector<Monomial> ci_leading_terms(int n, int k);

/// Predicted codimension of the jet scheme, when a closed form is known.
std::optional<long> predicted_codim(int n, int k, int r);

struct ComponentCodim {
  std::string label;
  long codim = 0;
};

struct ComponentReport {
  int n = 0;
  int k = 0;
  int r = 2;
  std::vector<ComponentCodim> components;
  std::string smallest;
  bool pure = false;
  long count_lower_bound = 0;
  bool count_exact = false;
};

/// Codimensions of the components Z_0..Z_{l-1} and Y_{l-1} for r = 2, n >= 6, k >= 2.
ComponentReport component_codims_r2(int n, int k);

struct ComponentBound {
  long value = 1;
  bool exact = false;
};

ComponentBound component_count_lower_bound(int n, int k, int r);

}  // namespace pfjet
