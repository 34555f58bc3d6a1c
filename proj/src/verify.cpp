#include "pfjet/verify.hpp"

#include "pfjet/io.hpp"
#include "pfjet/pfaffian.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace pfjet {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

GbOptions gb_options(const RunOptions& o) {
  GbOptions g;
  g.threads = o.threads;
  g.strategy = o.strategy;
  g.time_limit = o.time_limit;
  g.degree_cap = o.degree_cap;
  return g;
}

template <class F>
ComputedCase compute_with(const PaperCase& c, const RunOptions& options, const F& field) {
  const auto ideal = jet_generators(c.n, c.k, c.r, field);
  const auto gens = ideal.polynomials();
  GroebnerBasis<F> gb = [&] {
    if (!c.saturate_by) return buchberger<F>(gens, gb_options(options));
    const auto f = parse_polynomial<F>(*c.saturate_by, ideal.ring, field);
    return saturate<F>(gens, f, gb_options(options));
  }();
  auto initial = initial_ideal(gb);
  auto series = hilbert_series(initial).reduced();
  return {std::move(initial), std::move(series), gb.size(), gb.stats};
}

ZPoly zpoly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& v : j) {
    if (v.is_string()) {
      c.emplace_back(v.get<std::string>());
    } else {
      c.emplace_back(v.get<long>());
    }
  }
  return ZPoly(std::move(c));
}

bool is_symmetric(const std::vector<mpz_class>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != v[v.size() - 1 - i]) return false;
  }
  return true;
}

}  // namespace

std::vector<PaperCase> parse_paper_cases(const json& doc) {
  std::vector<PaperCase> out;
  for (const auto& item : doc.at("cases")) {
    PaperCase c;
    c.id = item.at("id").get<std::string>();
    c.n = item.at("n").get<int>();
    c.k = item.at("k").get<int>();
    c.r = item.at("r").get<int>();
    if (item.contains("saturate_by")) c.saturate_by = item.at("saturate_by").get<std::string>();
    for (const auto& e : item.at("expected")) {
      ExpectedValue ev{e.at("name").get<std::string>(), e.at("value"), e.at("source").get<std::string>()};
      if (ev.source.empty()) throw std::invalid_argument("case " + c.id + ": expectation " + ev.name + " has no source");
      c.expected.push_back(std::move(ev));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PaperCase> load_paper_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open case file '" + path + "'");
  return parse_paper_cases(json::parse(in));
}

const PaperCase& find_case(const std::vector<PaperCase>& cases, const std::string& id) {
  for (const auto& c : cases) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown case '" + id + "'");
}

ComputedCase compute_case(const PaperCase& c, const RunOptions& options) {
  if (options.field.kind == FieldTag::Kind::prime) return compute_with(c, options, PrimeField(options.field.modulus));
  if (options.field.kind == FieldTag::Kind::rationals) return compute_with(c, options, Rationals{});
  throw std::invalid_argument("cases run over q or a prime field");
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

json to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

CheckResult evaluate_expectation(const ExpectedValue& e, const ComputedCase& computed) {
  CheckResult r{e.name, e.value, nullptr, false, e.source};
  const HilbertSeries& h = computed.series;
  const auto hv = h.h_vector();
  if (e.name == "codim") {
    r.computed = h.codimension();
    r.pass = r.computed == e.value;
  } else if (e.name == "dimension") {
    r.computed = h.dimension();
    r.pass = r.computed == e.value;
  } else if (e.name == "numerator") {
    r.computed = to_json(hv);
    r.pass = h.numerator == zpoly_from_json(e.value);
  } else if (e.name == "multiplicity") {
    r.computed = to_json(h.multiplicity());
    r.pass = h.multiplicity() == zpoly_from_json(json::array({e.value})).coeff(0);
  } else if (e.name == "numerator_power") {
    const ZPoly base = zpoly_from_json(e.value.at("base"));
    const unsigned exponent = e.value.at("exponent").get<unsigned>();
    r.computed = to_json(hv);
    r.pass = h.numerator == base.pow(exponent);
  } else if (e.name == "h_vector_symmetric") {
    r.computed = is_symmetric(hv);
    r.pass = r.computed == e.value;
  } else if (e.name == "h_vector_positive") {
    bool positive = !hv.empty();
    for (const auto& c : hv) positive = positive && c > 0;
    r.computed = positive;
    r.pass = r.computed == e.value;
  } else {
    throw std::invalid_argument("unknown expectation '" + e.name + "'");
  }
  return r;
}

CaseReport verify_paper(const PaperCase& c, const RunOptions& options) {
  CaseReport report;
  report.id = c.id;
  report.field = options.field.to_string();
  const auto start = Clock::now();
  try {
    const ComputedCase computed = compute_case(c, options);
    const std::size_t cover = codimension(computed.initial);
    if (cover != computed.series.codimension()) {
      throw std::logic_error("series and vertex-cover codimensions disagree (" + std::to_string(computed.series.codimension()) +
                             " vs " + std::to_string(cover) + ")");
    }
    bool all = true;
    for (const auto& e : c.expected) {
      report.checks.push_back(evaluate_expectation(e, computed));
      all = all && report.checks.back().pass;
    }
    report.status = all ? CaseStatus::pass : CaseStatus::fail;
  } catch (const ResourceLimitExceeded& e) {
    report.status = CaseStatus::inconclusive;
    report.note = e.what();
  }
  report.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

json to_json(const CaseReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}, {"source", c.source}});
  }
  json out = {{"id", report.id},
              {"field", report.field},
              {"status", to_string(report.status)},
              {"checks", checks},
              {"wall_time", report.wall_time}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

std::vector<BenchRow> bench(const std::string& suite, const std::vector<PaperCase>& cases, const BenchOptions& options) {
  std::vector<BenchRow> rows;
  if (suite.empty()) return rows;
  if (suite != "paper") throw std::invalid_argument("unknown bench suite '" + suite + "'");
  for (const auto& c : cases) {
    for (const auto& field : options.fields) {
      for (const auto strategy : options.strategies) {
        BenchRow row{c.id, field.to_string(), to_string(strategy), "ok", 0.0, -1, 0, 0, ""};
        RunOptions run;
        run.field = field;
        run.threads = options.threads;
        run.strategy = strategy;
        run.time_limit = options.time_limit;
        reset_peak_rss();
        const auto start = Clock::now();
        try {
          const ComputedCase computed = compute_case(c, run);
          row.basis_size = computed.basis_size;
          row.reductions = computed.stats.reductions;
          row.initial_digest = digest(computed.initial);
        } catch (const ResourceLimitExceeded& e) {
          row.status = e.kind() == ResourceLimitExceeded::Kind::timeout ? "timeout" : "limit";
        } catch (const std::exception& e) {
          row.status = std::string("error: ") + e.what();
        }
        row.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        row.peak_rss_kb = peak_rss_kb();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

json to_json(const BenchRow& row) {
  return {{"case", row.case_id},     {"field", row.field},           {"strategy", row.strategy},
          {"status", row.status},    {"wall_time", row.wall_time},   {"peak_rss_kb", row.peak_rss_kb},
          {"basis_size", row.basis_size}, {"reductions", row.reductions}, {"initial_digest", row.initial_digest}};
}

void reset_peak_rss() {
  if (std::FILE* f = std::fopen("/proc/self/clear_refs", "w")) {
    std::fputs("5", f);
    std::fclose(f);
  }
}

long peak_rss_kb() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      long kb = -1;
      fields >> kb;
      return kb;
    }
  }
  return -1;
}

std::string digest(const MonomialIdeal& ideal) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : to_string(ideal)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pfjet
