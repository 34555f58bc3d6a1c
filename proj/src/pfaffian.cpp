#include "pfjet/pfaffian.hpp"

namespace pfjet {

int permutation_sign(const std::vector<std::size_t>& seq) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void collect_matchings(std::vector<std::size_t>& remaining, std::vector<std::pair<std::size_t, std::size_t>>& current,
                       std::vector<PerfectMatching>& out) {
  if (remaining.empty()) {
    std::vector<std::size_t> seq;
    seq.reserve(current.size() * 2);
    for (const auto& [i, j] : current) {
      seq.push_back(i);
      seq.push_back(j);
    }
    out.push_back({current, permutation_sign(seq)});
    return;
  }
  const std::size_t first = remaining.front();
  for (std::size_t idx = 1; idx < remaining.size(); ++idx) {
    const std::size_t partner = remaining[idx];
    std::vector<std::size_t> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t q = 1; q < remaining.size(); ++q) {
      if (q != idx) rest.push_back(remaining[q]);
    }
    current.emplace_back(first, partner);
    collect_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PerfectMatching> perfect_matchings(std::size_t m) {
  if (m % 2 != 0) throw std::invalid_argument("perfect matchings need an even number of points");
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i + 1;
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<PerfectMatching> out;
  collect_matchings(all, current, out);
  return out;
}

std::vector<std::vector<std::size_t>> subsets_colex(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  if (q == 0) return {{}};
  std::vector<std::size_t> c(q);
  for (std::size_t i = 0; i < q; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    // colex successor: bump the first entry that can move up
    std::size_t i = 0;
    while (i < q && c[i] + 1 == (i + 1 < q ? c[i + 1] : n + 1)) ++i;
    if (i == q) break;
    ++c[i];
    for (std::size_t a = 0; a < i; ++a) c[a] = a + 1;
  }
  return out;
}

}  // namespace pfjet
