#include "pfjet/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

namespace pfjet {

std::string to_string(PairStrategy s) {
  switch (s) {
    case PairStrategy::normal:
      return "normal";
    case PairStrategy::normal_reversed:
      return "normal-reversed";
  }
  return "?";
}

PairStrategy parse_pair_strategy(const std::string& name) {
  if (name == "normal") return PairStrategy::normal;
  if (name == "normal-reversed") return PairStrategy::normal_reversed;
  throw std::invalid_argument("unknown pair strategy '" + name + "'");
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  const MonomialOrder& ord = ring_->order();
  for (const auto& g : gens) require_same_ring(*g.ring(), *ring_);
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ord.compare(a.data(), b.data()) < 0;
  });
  const std::size_t nv = ring_->num_vars();
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (packed::divides(kept.data(), g.data(), nv)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a.data(), b.data()) < 0; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(*m.ring(), *ring_);
  for (const auto& g : gens_) {
    if (packed::divides(g.data(), m.data(), ring_->num_vars())) return true;
  }
  return false;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  require_same_ring(*ring_, *other.ring_);
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!(gens_[i] == other.gens_[i])) return false;
  }
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

namespace {

using Clock = std::chrono::steady_clock;

// Multipliers (a, b) with a*c == b*lead, used as  a*f - b*shift*g.
template <class D>
struct Arith;

template <class D>
  requires D::is_field
struct Arith<D> {
  using element = typename D::element;
  /// Returns true when a != 1 (never, for fields).
  static bool multipliers(const D& dom, const element& c, const element& lead, element& a, element& b) {
    a = dom.one();
    b = dom.div(c, lead);
    return false;
  }
  static Polynomial<D> normalize(const Polynomial<D>& p) { return p.monic(); }
};

template <>
struct Arith<Integers> {
  using element = mpz_class;
  static bool multipliers(const Integers&, const element& c, const element& lead, element& a, element& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    return a != 1;
  }
  static Polynomial<Integers> normalize(const Polynomial<Integers>& p) { return primitive_part(p); }
};

// Geometric buckets of ascending term lists; the leading term of each bucket
// sits at its back.
template <class D>
class Accumulator {
 public:
  using element = typename D::element;

  Accumulator(const Ring& ring, D dom) : ord_(ring.order()), nvars_(ring.num_vars()), stride_(ring.stride()), dom_(std::move(dom)) {}

  void clear() {
    for (auto& b : buckets_) b.clear();
  }

  /// Adds c * shift * g[from:], shift may be null (meaning 1).
  void add(const Polynomial<D>& g, std::size_t from, const exponent* shift, const element& c) {
    if (from >= g.size()) return;
    scratch_.clear();
    scratch_.exps.resize((g.size() - from) * stride_);
    scratch_.coeffs.reserve(g.size() - from);
    std::size_t out = 0;
    for (std::size_t t = g.size(); t-- > from; ++out) {
      exponent* dst = scratch_.exps.data() + out * stride_;
      if (shift) {
        packed::multiply(g.term_data(t), shift, dst, nvars_);
      } else {
        std::copy_n(g.term_data(t), stride_, dst);
      }
      scratch_.coeffs.push_back(dom_.mul(g.coefficient(t), c));
    }
    insert(scratch_);
  }

  void scale(const element& a) {
    for (auto& b : buckets_) {
      for (auto& c : b.coeffs) c = dom_.mul(c, a);
    }
  }

  /// Extracts the combined leading term; false when the sum is zero.
  bool pop_lead(std::vector<exponent>& mono, element& coeff) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || ord_.compare(buckets_[i].lead(stride_), buckets_[best].lead(stride_)) > 0) best = static_cast<int>(i);
      }
      if (best < 0) return false;
      mono.assign(buckets_[best].lead(stride_), buckets_[best].lead(stride_) + stride_);
      coeff = buckets_[best].coeffs.back();
      buckets_[best].pop(stride_);
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (packed::equal(buckets_[i].lead(stride_), mono.data(), nvars_)) {
          coeff = dom_.add(coeff, buckets_[i].coeffs.back());
          buckets_[i].pop(stride_);
        }
      }
      if (!dom_.is_zero(coeff)) return true;
    }
  }

 private:
  struct Bucket {
    std::vector<exponent> exps;
    std::vector<element> coeffs;
    bool empty() const { return coeffs.empty(); }
    std::size_t size() const { return coeffs.size(); }
    void clear() {
      exps.clear();
      coeffs.clear();
    }
    const exponent* lead(std::size_t stride) const { return exps.data() + (coeffs.size() - 1) * stride; }
    void pop(std::size_t stride) {
      coeffs.pop_back();
      exps.resize(exps.size() - stride);
    }
  };

  static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }

  void insert(Bucket& incoming) {
    std::size_t level = 0;
    while (capacity(level) < incoming.size()) ++level;
    while (true) {
      if (buckets_.size() <= level) buckets_.resize(level + 1);
      Bucket& b = buckets_[level];
      if (b.empty()) {
        std::swap(b, incoming);
        return;
      }
      merge(b, incoming, merged_);
      b.clear();
      if (merged_.size() <= capacity(level)) {
        std::swap(b, merged_);
        return;
      }
      std::swap(incoming, merged_);
      ++level;
    }
  }

  void merge(const Bucket& a, const Bucket& b, Bucket& out) {
    out.clear();
    out.exps.reserve((a.size() + b.size()) * stride_);
    out.coeffs.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const exponent* ea = a.exps.data() + i * stride_;
      const exponent* eb = b.exps.data() + j * stride_;
      const auto cmp = ord_.compare(ea, eb);
      if (cmp < 0) {
        out.exps.insert(out.exps.end(), ea, ea + stride_);
        out.coeffs.push_back(a.coeffs[i++]);
      } else if (cmp > 0) {
        out.exps.insert(out.exps.end(), eb, eb + stride_);
        out.coeffs.push_back(b.coeffs[j++]);
      } else {
        element c = dom_.add(a.coeffs[i], b.coeffs[j]);
        if (!dom_.is_zero(c)) {
          out.exps.insert(out.exps.end(), ea, ea + stride_);
          out.coeffs.push_back(std::move(c));
        }
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) {
      out.exps.insert(out.exps.end(), a.exps.data() + i * stride_, a.exps.data() + (i + 1) * stride_);
      out.coeffs.push_back(a.coeffs[i]);
    }
    for (; j < b.size(); ++j) {
      out.exps.insert(out.exps.end(), b.exps.data() + j * stride_, b.exps.data() + (j + 1) * stride_);
      out.coeffs.push_back(b.coeffs[j]);
    }
  }

  const MonomialOrder& ord_;
  std::size_t nvars_;
  std::size_t stride_;
  D dom_;
  std::vector<Bucket> buckets_;
  Bucket scratch_;
  Bucket merged_;
};

template <class D>
struct Reducer {
  const Polynomial<D>* poly;
  std::uint64_t mask;
};

class LimitGuard {
 public:
  explicit LimitGuard(const GbOptions& opt) : stop_(opt.stop) {
    if (opt.time_limit) deadline_ = Clock::now() + *opt.time_limit;
  }
  void check() const {
    if (stop_.stop_requested()) throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::cancelled, "computation cancelled");
    if (deadline_ && Clock::now() > *deadline_) {
      throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::timeout, "time limit exceeded");
    }
  }

 private:
  std::stop_token stop_;
  std::optional<Clock::time_point> deadline_;
};

// Drains the accumulator into a fully reduced polynomial.
template <class D>
Polynomial<D> drain_reduce(Accumulator<D>& acc, const RingPtr& ring, const D& dom, const std::vector<Reducer<D>>& reducers,
                           std::size_t& steps, const LimitGuard* guard) {
  using element = typename D::element;
  const std::size_t nv = ring->num_vars();
  const std::size_t stride = ring->stride();
  std::vector<exponent> mono, shift(stride);
  element c, a, b;
  std::vector<exponent> out_exps;
  std::vector<element> out_coeffs;
  std::size_t local = 0;
  while (acc.pop_lead(mono, c)) {
    if (guard && (++local & 255) == 0) guard->check();
    const std::uint64_t mmask = packed::mask(mono.data(), nv);
    const Reducer<D>* hit = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~mmask) != 0) continue;
      if (packed::divides(r.poly->term_data(0), mono.data(), nv)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      out_exps.insert(out_exps.end(), mono.begin(), mono.end());
      out_coeffs.push_back(c);
      continue;
    }
    packed::quotient(mono.data(), hit->poly->term_data(0), shift.data(), nv);
    if (Arith<D>::multipliers(dom, c, hit->poly->leading_coefficient(), a, b)) {
      acc.scale(a);
      for (auto& oc : out_coeffs) oc = dom.mul(oc, a);
    }
    acc.add(*hit->poly, 1, shift.data(), dom.neg(b));
    ++steps;
  }
  return Polynomial<D>::from_sorted(ring, dom, std::move(out_exps), std::move(out_coeffs));
}

template <class D>
std::vector<Reducer<D>> make_reducers(std::span<const Polynomial<D>> basis) {
  std::vector<Reducer<D>> out;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    out.push_back({&g, packed::mask(g.term_data(0), g.num_vars())});
  }
  return out;
}

// Loads a*(L/lt f)*f - b*(L/lt g)*g with a*lc(f) == b*lc(g), so the leading terms cancel.
template <class D>
void load_spoly(Accumulator<D>& acc, const Polynomial<D>& f, const Polynomial<D>& g, const D& dom) {
  const std::size_t nv = f.num_vars();
  const std::size_t stride = f.stride();
  std::vector<exponent> l(stride), sf(stride), sg(stride);
  packed::lcm(f.term_data(0), g.term_data(0), l.data(), nv);
  packed::quotient(l.data(), f.term_data(0), sf.data(), nv);
  packed::quotient(l.data(), g.term_data(0), sg.data(), nv);
  typename D::element a, b;
  Arith<D>::multipliers(dom, f.leading_coefficient(), g.leading_coefficient(), a, b);
  acc.clear();
  acc.add(f, 1, sf.data(), a);
  acc.add(g, 1, sg.data(), dom.neg(b));
}

template <class D>
class Engine {
 public:
  using element = typename D::element;

  Engine(RingPtr ring, D dom, const GbOptions& opt) : ring_(std::move(ring)), dom_(std::move(dom)), opt_(opt), guard_(opt) {}

  std::vector<Polynomial<D>> run(const std::vector<Polynomial<D>>& gens) {
    nv_ = ring_->num_vars();
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      inputs_.push_back(Arith<D>::normalize(g));
    }
    for (std::size_t idx = 0; idx < inputs_.size(); ++idx) {
      const auto& g = inputs_[idx];
      std::vector<exponent> lead(g.term_data(0), g.term_data(0) + ring_->stride());
      pairs_.push_back({idx, npos, std::move(lead), 0, g.total_degree(), seq_++});
    }
    while (!pairs_.empty()) {
      guard_.check();
      const int degree = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
                           return a.sugar < b.sugar;
                         })->sugar;
      if (opt_.degree_cap && degree > *opt_.degree_cap) {
        throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::degree_cap,
                                    "degree cap " + std::to_string(*opt_.degree_cap) + " exceeded (next degree " +
                                        std::to_string(degree) + ")");
      }
      process_batch(take_batch(degree), degree);
    }
    return finalize();
  }

  GbStats stats;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Element {
    Polynomial<D> poly;
    std::uint64_t mask;
    int sugar;
    bool active;
  };

  // j == npos marks an input generator (i indexes inputs_).
  struct Pair {
    std::size_t i;
    std::size_t j;
    std::vector<exponent> lcm;
    std::uint64_t lcm_mask;
    int sugar;
    std::size_t seq;
  };

  std::vector<Pair> take_batch(int degree) {
    std::vector<Pair> batch, rest;
    for (auto& p : pairs_) (p.sugar == degree ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    const MonomialOrder& ord = ring_->order();
    const bool reversed = opt_.strategy == PairStrategy::normal_reversed;
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      const auto c = ord.compare(a.lcm.data(), b.lcm.data());
      if (c != 0) return reversed ? c > 0 : c < 0;
      return reversed ? a.seq > b.seq : a.seq < b.seq;
    });
    return batch;
  }

  std::vector<Reducer<D>> active_reducers() const {
    std::vector<Reducer<D>> out;
    for (const auto& e : elems_) {
      if (e.active) out.push_back({&e.poly, e.mask});
    }
    return out;
  }

  Polynomial<D> reduce_pair(const Pair& p, Accumulator<D>& acc, const std::vector<Reducer<D>>& reducers, std::size_t& steps) {
    if (p.j == npos) {
      acc.clear();
      acc.add(inputs_[p.i], 0, nullptr, dom_.one());
    } else {
      load_spoly(acc, elems_[p.i].poly, elems_[p.j].poly, dom_);
    }
    return drain_reduce(acc, ring_, dom_, reducers, steps, &guard_);
  }

  void process_batch(const std::vector<Pair>& batch, int degree) {
    const auto snapshot = active_reducers();
    std::vector<Polynomial<D>> results(batch.size(), Polynomial<D>(ring_, dom_));
    const unsigned workers = std::min<unsigned>(std::max(1u, opt_.threads), static_cast<unsigned>(batch.size()));
    if (workers <= 1) {
      Accumulator<D> acc(*ring_, dom_);
      for (std::size_t b = 0; b < batch.size(); ++b) results[b] = reduce_pair(batch[b], acc, snapshot, stats.reductions);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::size_t> steps(workers, 0);
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            try {
              Accumulator<D> acc(*ring_, dom_);
              for (std::size_t b; (b = next.fetch_add(1)) < batch.size();) {
                results[b] = reduce_pair(batch[b], acc, snapshot, steps[w]);
              }
            } catch (...) {
              errors[w] = std::current_exception();
              next.store(batch.size());
            }
          });
        }
      }
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (auto s : steps) stats.reductions += s;
    }
    stats.spolys += batch.size();

    // Serial commit in batch order keeps the output independent of the worker count.
    bool grown = false;
    Accumulator<D> acc(*ring_, dom_);
    for (auto& h : results) {
      if (!h.is_zero() && grown) {
        acc.clear();
        acc.add(h, 0, nullptr, dom_.one());
        h = drain_reduce(acc, ring_, dom_, active_reducers(), stats.reductions, &guard_);
      }
      if (h.is_zero()) {
        ++stats.zero_reductions;
        continue;
      }
      add_element(Arith<D>::normalize(h), degree);
      grown = true;
    }
  }

  bool lcm_matches(const exponent* a, const exponent* b, const exponent* l) const {
    for (std::size_t v = 1; v <= nv_; ++v) {
      if (std::max(a[v], b[v]) != l[v]) return false;
    }
    return true;
  }

  // Gebauer-Moeller update.
  void add_element(Polynomial<D> h, int sugar) {
    const std::size_t hn = elems_.size();
    const std::uint64_t hmask = packed::mask(h.term_data(0), nv_);
    elems_.push_back({std::move(h), hmask, sugar, true});
    const exponent* lh = elems_[hn].poly.term_data(0);
    const int hdeg = lh[0];
    const std::size_t stride = ring_->stride();

    struct Candidate {
      std::size_t g;
      std::vector<exponent> lcm;
      std::uint64_t mask;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hn; ++g) {
      if (!elems_[g].active) continue;
      const exponent* lg = elems_[g].poly.term_data(0);
      Candidate c{g, std::vector<exponent>(stride), 0, packed::coprime(lg, lh, nv_)};
      packed::lcm(lg, lh, c.lcm.data(), nv_);
      c.mask = packed::mask(c.lcm.data(), nv_);
      cands.push_back(std::move(c));
    }
    auto lcm_divides = [&](const Candidate& a, const Candidate& b) {
      return (a.mask & ~b.mask) == 0 && packed::divides(a.lcm.data(), b.lcm.data(), nv_);
    };
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (!cands[c].coprime) {
        bool drop = false;
        for (std::size_t later = c + 1; later < cands.size() && !drop; ++later) drop = lcm_divides(cands[later], cands[c]);
        for (std::size_t q = 0; q < kept.size() && !drop; ++q) drop = lcm_divides(cands[kept[q]], cands[c]);
        if (drop) {
          ++stats.pruned_chain;
          continue;
        }
      }
      kept.push_back(c);
    }

    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.j != npos && (hmask & ~p.lcm_mask) == 0 && packed::divides(lh, p.lcm.data(), nv_)) {
        const exponent* li = elems_[p.i].poly.term_data(0);
        const exponent* lj = elems_[p.j].poly.term_data(0);
        if (!lcm_matches(li, lh, p.lcm.data()) && !lcm_matches(lj, lh, p.lcm.data())) {
          ++stats.pruned_chain;
          continue;
        }
      }
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);

    for (std::size_t c : kept) {
      auto& cand = cands[c];
      if (cand.coprime) {
        ++stats.pruned_coprime;
        continue;
      }
      const auto& g = elems_[cand.g];
      const int s = std::max(g.sugar - static_cast<int>(g.poly.term_data(0)[0]), sugar - hdeg) + cand.lcm[0];
      pairs_.push_back({cand.g, hn, std::move(cand.lcm), cand.mask, s, seq_++});
    }

    for (std::size_t g = 0; g < hn; ++g) {
      auto& e = elems_[g];
      if (e.active && (hmask & ~e.mask) == 0 && packed::divides(lh, e.poly.term_data(0), nv_)) e.active = false;
    }
  }

  std::vector<Polynomial<D>> finalize() {
    std::vector<const Element*> active;
    for (const auto& e : elems_) {
      if (e.active) active.push_back(&e);
    }
    std::vector<Polynomial<D>> out;
    Accumulator<D> acc(*ring_, dom_);
    for (const Element* e : active) {
      std::vector<Reducer<D>> others;
      for (const Element* o : active) {
        if (o != e) others.push_back({&o->poly, o->mask});
      }
      acc.clear();
      acc.add(e->poly, 0, nullptr, dom_.one());
      out.push_back(Arith<D>::normalize(drain_reduce(acc, ring_, dom_, others, stats.reductions, &guard_)));
    }
    const MonomialOrder& ord = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial<D>& a, const Polynomial<D>& b) {
      return ord.compare(a.term_data(0), b.term_data(0)) < 0;
    });
    for (const auto& g : out) stats.max_degree = std::max(stats.max_degree, g.total_degree());
    return out;
  }

  RingPtr ring_;
  D dom_;
  const GbOptions& opt_;
  LimitGuard guard_;
  std::size_t nv_ = 0;
  std::vector<Polynomial<D>> inputs_;
  std::deque<Element> elems_;
  std::vector<Pair> pairs_;
  std::size_t seq_ = 0;
};

template <class F>
void require_compatible(std::span<const Polynomial<F>> polys) {
  for (const auto& p : polys) p.require_compatible(polys.front());
}

}  // namespace

template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, std::span<const Polynomial<F>> basis, std::size_t* steps) {
  for (const auto& g : basis) f.require_compatible(g);
  Accumulator<F> acc(*f.ring(), f.field());
  acc.add(f, 0, nullptr, f.field().one());
  std::size_t local = 0;
  auto r = drain_reduce(acc, f.ring(), f.field(), make_reducers(basis), local, nullptr);
  if (steps) *steps += local;
  return r;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.require_compatible(g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  Accumulator<F> acc(*f.ring(), f.field());
  load_spoly(acc, f, g, f.field());
  std::size_t steps = 0;
  return drain_reduce(acc, f.ring(), f.field(), std::vector<Reducer<F>>{}, steps, nullptr);
}

template <class F>
std::optional<Polynomial<F>> groebner_obstruction(std::span<const Polynomial<F>> gens) {
  if (gens.empty()) return std::nullopt;
  require_compatible(gens);
  const auto reducers = make_reducers(gens);
  const std::size_t nv = gens.front().num_vars();
  Accumulator<F> acc(*gens.front().ring(), gens.front().field());
  for (std::size_t a = 0; a < reducers.size(); ++a) {
    for (std::size_t b = a + 1; b < reducers.size(); ++b) {
      const auto& f = *reducers[a].poly;
      const auto& g = *reducers[b].poly;
      if (packed::coprime(f.term_data(0), g.term_data(0), nv)) continue;
      load_spoly(acc, f, g, f.field());
      std::size_t steps = 0;
      auto r = drain_reduce(acc, f.ring(), f.field(), reducers, steps, nullptr);
      if (!r.is_zero()) return r;
    }
  }
  return std::nullopt;
}

template <class F>
bool is_groebner(std::span<const Polynomial<F>> gens) {
  return !groebner_obstruction(gens).has_value();
}

template <class F>
MonomialIdeal leading_monomial_ideal(std::span<const Polynomial<F>> polys) {
  if (polys.empty()) throw std::invalid_argument("leading monomial ideal of an empty list needs a ring");
  std::vector<Monomial> leads;
  for (const auto& p : polys) {
    if (!p.is_zero()) leads.push_back(p.leading_monomial());
  }
  return MonomialIdeal(polys.front().ring(), std::move(leads));
}

template <class F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const GbOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs a nonempty generator list");
  require_compatible(gens);
  const auto start = Clock::now();
  const RingPtr& ring = gens.front().ring();
  GroebnerBasis<F> gb{ring, gens.front().field(), {}, true, false, {}};
  if constexpr (std::is_same_v<F, Rationals>) {
    std::vector<Polynomial<Integers>> ints;
    for (const auto& g : gens) {
      if (!g.is_zero()) ints.push_back(to_primitive_integer(g));
    }
    Engine<Integers> engine(ring, Integers{}, options);
    for (const auto& g : engine.run(ints)) gb.elements.push_back(to_monic_rational(g));
    gb.stats = engine.stats;
  } else {
    Engine<F> engine(ring, gb.field, options);
    gb.elements = engine.run(std::vector<Polynomial<F>>(gens.begin(), gens.end()));
    gb.stats = engine.stats;
  }
  if (options.verify) {
    gb.verified = is_groebner<F>(gb.elements);
    if (!gb.verified) throw std::logic_error("buchberger produced a basis that fails the S-pair check");
  }
  gb.stats.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return gb;
}

template <class F>
GroebnerBasis<F> saturate(std::span<const Polynomial<F>> gens, const Polynomial<F>& f, const GbOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  if (gens.empty()) throw std::invalid_argument("saturation needs a nonempty generator list");
  require_compatible(gens);
  gens.front().require_compatible(f);
  const RingPtr& ring = gens.front().ring();
  const RingPtr big = with_auxiliary(ring, 1);
  const VarId w = big->var(0);
  const F& field = f.field();
  std::vector<Polynomial<F>> system;
  for (const auto& g : gens) system.push_back(embed(g, big));
  system.push_back(Polynomial<F>::constant(big, field, field.one()) -
                   Polynomial<F>::variable(big, field, w) * embed(f, big));
  auto elim = buchberger<F>(system, options);
  GroebnerBasis<F> out{ring, field, {}, true, false, elim.stats};
  const std::size_t wpos = *big->position(w);
  for (const auto& g : elim.elements) {
    if (!g.uses_variable(wpos)) out.elements.push_back(embed(g, ring));
  }
  const MonomialOrder& ord = ring->order();
  std::sort(out.elements.begin(), out.elements.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return ord.compare(a.term_data(0), b.term_data(0)) < 0;
  });
  out.stats.max_degree = 0;
  for (const auto& g : out.elements) out.stats.max_degree = std::max(out.stats.max_degree, g.total_degree());
  out.verified = elim.verified;
  return out;
}

#define PFJET_INSTANTIATE(F)                                                                                 \
  template Polynomial<F> reduce<F>(const Polynomial<F>&, std::span<const Polynomial<F>>, std::size_t*);     \
  template Polynomial<F> s_polynomial<F>(const Polynomial<F>&, const Polynomial<F>&);                        \
  template std::optional<Polynomial<F>> groebner_obstruction<F>(std::span<const Polynomial<F>>);            \
  template bool is_groebner<F>(std::span<const Polynomial<F>>);                                             \
  template MonomialIdeal leading_monomial_ideal<F>(std::span<const Polynomial<F>>);                         \
  template GroebnerBasis<F> buchberger<F>(std::span<const Polynomial<F>>, const GbOptions&);                \
  template GroebnerBasis<F> saturate<F>(std::span<const Polynomial<F>>, const Polynomial<F>&, const GbOptions&);

PFJET_INSTANTIATE(Rationals)
PFJET_INSTANTIATE(PrimeField)

#undef PFJET_INSTANTIATE

}  // namespace pfjet
