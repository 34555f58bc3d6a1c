// pfjet: command-line front end for jet ideals of pfaffians.

#include "pfjet/formulas.hpp"
#include "pfjet/groebner.hpp"
#include "pfjet/hilbert.hpp"
#include "pfjet/io.hpp"
#include "pfjet/pfaffian.hpp"
#include "pfjet/verify.hpp"
#include "pfjet/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef PFJET_DATA_DIR
#define PFJET_DATA_DIR "data"
#endif

using nlohmann::json;
using namespace pfjet;

namespace {

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct Common {
  std::string format = "json";
  std::string field = "q";
  std::string order;
  std::string strategy = "normal";
  unsigned threads = 1;
  std::optional<int> degree_cap;
  std::optional<double> time_limit;
  std::string output;
};

unsigned default_threads() {
  if (const char* env = std::getenv("PFJET_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid PFJET_THREADS='" << env << "'\n";
  }
  return 1;
}

GbOptions gb_options(const Common& c) {
  GbOptions o;
  o.threads = c.threads;
  o.strategy = parse_pair_strategy(c.strategy);
  o.degree_cap = c.degree_cap;
  if (c.time_limit) o.time_limit = std::chrono::milliseconds(static_cast<long>(*c.time_limit * 1000));
  return o;
}

std::optional<OrderChoice> order_choice(const Common& c) {
  if (c.order.empty()) return std::nullopt;
  return parse_order_choice(c.order);
}

void print_text(std::ostream& out, const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      out << indent << it.key() << ":\n";
      print_text(out, *it, indent + "  ");
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& item : *it) {
        out << indent << "  -\n";
        print_text(out, item, indent + "    ");
      }
    } else {
      out << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    print_text(std::cout, j);
  }
}

template <class Fn>
auto with_field(const FieldTag& tag, Fn&& fn) {
  if (tag.kind == FieldTag::Kind::prime) return fn(PrimeField(tag.modulus));
  return fn(Rationals{});
}

json gb_summary(const GbStats& s, std::size_t size) {
  return {{"basis_size", size}, {"max_degree", s.max_degree}, {"reductions", s.reductions}, {"wall_time", s.wall_time}};
}

template <class F>
void write_basis(const Common& c, IdealHeader header, const RingPtr& ring, const GroebnerBasis<F>& gb) {
  header.kind = "groebner-basis";
  header.extra["order"] = ring->order().kind() == MonomialOrder::Kind::paper_degrevlex ? "paper" : "elim";
  header.extra["field"] = gb.field.tag().to_string();
  if (!c.output.empty()) {
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot write '" + c.output + "'");
    write_ideal<F>(out, header, gb.elements);
  } else if (c.format == "text") {
    write_ideal<F>(std::cout, header, gb.elements);
  }
}

int run_gen(const Common& c, int n, int k, int r) {
  const auto ideal = jet_generators(n, k, r, Rationals{});
  IdealHeader header{"pfaffian-jet", n, k, r, 0, {}};
  const auto polys = ideal.polynomials();
  if (c.output.empty()) {
    write_ideal<Rationals>(std::cout, header, polys);
  } else {
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot write '" + c.output + "'");
    write_ideal<Rationals>(out, header, polys);
    std::cerr << "wrote " << polys.size() << " generators to " << c.output << "\n";
  }
  return 0;
}

int run_gb(const Common& c, const std::string& input) {
  const auto text = read_ideal_file(input);
  const RingPtr ring = ring_for(text.header, order_choice(c));
  return with_field(parse_field_tag(c.field), [&](auto field) {
    using F = decltype(field);
    const auto gens = parse_polynomials(text, ring, field);
    if (gens.empty()) throw std::invalid_argument("input has no polynomials");
    const auto gb = buchberger<F>(gens, gb_options(c));
    write_basis(c, text.header, ring, gb);
    if (c.format == "json" || !c.output.empty()) emit(gb_summary(gb.stats, gb.size()), c.format);
    return 0;
  });
}

int run_saturate(const Common& c, const std::string& input, const std::string& by) {
  const auto text = read_ideal_file(input);
  if (text.header.aux != 0) throw std::invalid_argument("saturate expects an input without auxiliary variables");
  const RingPtr ring = ring_for(text.header, order_choice(c));
  return with_field(parse_field_tag(c.field), [&](auto field) {
    using F = decltype(field);
    const auto gens = parse_polynomials(text, ring, field);
    if (gens.empty()) throw std::invalid_argument("input has no polynomials");
    const auto f = parse_polynomial<F>(by, ring, field);
    const auto gb = saturate<F>(gens, f, gb_options(c));
    IdealHeader header = text.header;
    header.extra["saturated_by"] = by;
    write_basis(c, header, ring, gb);
    if (c.format == "json" || !c.output.empty()) emit(gb_summary(gb.stats, gb.size()), c.format);
    return 0;
  });
}

json hilbert_report(const MonomialIdeal& initial) {
  const HilbertSeries raw = hilbert_series(initial);
  const HilbertSeries red = raw.reduced();
  const std::size_t cover_codim = codimension(initial);
  if (cover_codim != red.codimension()) throw std::logic_error("series and vertex-cover codimensions disagree");
  return {{"ambient", raw.ambient},
          {"dimension", red.dimension()},
          {"codimension", red.codimension()},
          {"h_vector", to_json(red.h_vector())},
          {"multiplicity", to_json(red.multiplicity())},
          {"numerator_coeffs", to_json(raw.numerator.coeffs())},
          {"denominator_exponent", raw.denominator_exp}};
}

int run_hilbert(const Common& c, const std::string& input) {
  const auto text = read_ideal_file(input);
  std::optional<OrderChoice> order = order_choice(c);
  if (!order && text.header.extra.count("order")) order = parse_order_choice(text.header.extra.at("order"));
  const RingPtr ring = ring_for(text.header, order);
  MonomialIdeal initial(ring);
  if (text.header.kind == "monomial-ideal") {
    initial = parse_monomial_ideal(text, ring);
  } else {
    std::string field_text = c.field;
    if (text.header.kind == "groebner-basis" && text.header.extra.count("field")) field_text = text.header.extra.at("field");
    initial = with_field(parse_field_tag(field_text), [&](auto field) {
      using F = decltype(field);
      const auto polys = parse_polynomials(text, ring, field);
      if (text.header.kind == "groebner-basis") return leading_monomial_ideal<F>(polys);
      return initial_ideal(buchberger<F>(polys, gb_options(c)));
    });
  }
  if (initial.is_unit()) throw std::invalid_argument("the ideal is the unit ideal");
  emit(hilbert_report(initial), c.format);
  return 0;
}

json series_json(const HilbertSeries& h) {
  return {{"numerator", to_json(h.numerator.coeffs())},
          {"denominator_exponent", h.denominator_exp},
          {"multiplicity", to_json(h.multiplicity())}};
}

int run_predict(const Common& c, int n, int k, int r) {
  json out = {{"n", n}, {"k", k}, {"r", r}};
  const auto codim = predicted_codim(n, k, r);
  out["predicted_codim"] = codim ? json(*codim) : json(nullptr);
  const auto bound = component_count_lower_bound(n, k, r);
  out["component_count_lower_bound"] = bound.value;
  out["component_count_exact"] = bound.exact;
  if (r == 2 && n >= 6 && k >= 2) {
    const auto rep = component_codims_r2(n, k);
    json comps = json::array();
    for (const auto& comp : rep.components) comps.push_back({{"label", comp.label}, {"codim", comp.codim}});
    out["components"] = comps;
    out["smallest"] = rep.smallest;
    out["pure"] = rep.pure;
  }
  const auto classical = classical_hilbert_series(n, r);
  out["classical"] = {{"dimension", classical_dimension(n, r)},
                      {"multiplicity", to_json(classical_multiplicity(n, r))},
                      {"series", series_json(classical)}};
  if (n == 2 * r) {
    json leads = json::array();
    for (const auto& m : ci_leading_terms(n, k)) leads.push_back(to_string(m));
    out["complete_intersection"] = {{"series", series_json(ci_hilbert_series(n, k))}, {"leading_terms", leads}};
  }
  emit(out, c.format);
  return 0;
}

template <class F>
json point_json(const JetPoint<F>& p, const std::string& kind) {
  const F& field = p.field();
  json entries = json::array();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(p.n()); ++i) {
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(p.n()); ++j) {
      const auto coeffs = p.entry(i, j);
      bool nonzero = false;
      json cs = json::array();
      for (const auto& v : coeffs) {
        nonzero = nonzero || !field.is_zero(v);
        cs.push_back(field.to_string(v));
      }
      if (nonzero) entries.push_back({{"i", i}, {"j", j}, {"coeffs", cs}});
    }
  }
  json pf = json::array();
  for (const auto& v : pfaffian_coefficients(p)) pf.push_back(field.to_string(v));
  json out = {{"point", kind}, {"n", p.n()}, {"k", p.k()}, {"field", field.tag().to_string()}, {"entries", entries}, {"pfaffian_coeffs", pf}};
  const auto violation = variety_violation(p, 2);
  out["on_variety"] = !violation.has_value();
  if (violation) {
    json rows = json::array();
    for (auto row : violation->rows) rows.push_back(row);
    out["violation"] = {{"rows", rows}, {"h", violation->h}, {"value", violation->value}};
    out["z0_condition"] = nullptr;
  } else {
    out["violation"] = nullptr;
    out["z0_condition"] = z0_obstruction(p);
  }
  return out;
}

int run_witness(const Common& c, int k, const std::string& point, std::uint64_t seed) {
  const FieldTag tag = parse_field_tag(c.field);
  if (point == "crux") {
    emit(with_field(tag, [&](auto field) { return point_json(crux2_witness(k, field), point); }), c.format);
    return 0;
  }
  if (point == "u56") {
    if (tag.kind != FieldTag::Kind::prime) throw std::invalid_argument("the u56 sampler needs --field p:<modulus>");
    std::mt19937_64 rng(seed);
    emit(point_json(sample_u56_point(k, rng, PrimeField(tag.modulus)), point), c.format);
    return 0;
  }
  throw std::invalid_argument("unknown point '" + point + "' (expected crux or u56)");
}

RunOptions run_options(const Common& c) {
  RunOptions o;
  o.field = parse_field_tag(c.field);
  o.threads = c.threads;
  o.strategy = parse_pair_strategy(c.strategy);
  o.degree_cap = c.degree_cap;
  if (c.time_limit) o.time_limit = std::chrono::milliseconds(static_cast<long>(*c.time_limit * 1000));
  return o;
}

int run_verify(const Common& c, const std::string& cases_path, std::vector<std::string> ids, bool all) {
  const auto cases = load_paper_cases(cases_path);
  if (all) {
    ids.clear();
    for (const auto& pc : cases) ids.push_back(pc.id);
  }
  if (ids.empty()) throw std::invalid_argument("name at least one case or pass --all");
  const RunOptions options = run_options(c);
  json reports = json::array();
  bool failed = false, inconclusive = false;
  for (const auto& id : ids) {
    const auto report = verify_paper(find_case(cases, id), options);
    failed = failed || report.status == CaseStatus::fail;
    inconclusive = inconclusive || report.status == CaseStatus::inconclusive;
    reports.push_back(to_json(report));
  }
  const std::string overall = failed ? "fail" : inconclusive ? "inconclusive" : "pass";
  if (c.format == "json") {
    emit({{"status", overall}, {"cases", reports}}, c.format);
  } else {
    for (const auto& rep : reports) {
      std::cout << rep["id"].get<std::string>() << " [" << rep["field"].get<std::string>() << "] "
                << rep["status"].get<std::string>() << " (" << std::fixed << std::setprecision(3)
                << rep["wall_time"].get<double>() << " s)\n";
      for (const auto& chk : rep["checks"]) {
        std::cout << "  " << (chk["pass"].get<bool>() ? "PASS " : "FAIL ") << chk["name"].get<std::string>()
                  << ": expected " << chk["expected"].dump() << ", computed " << chk["computed"].dump() << "  ["
                  << chk["source"].get<std::string>() << "]\n";
      }
      if (rep.contains("note")) std::cout << "  note: " << rep["note"].get<std::string>() << "\n";
    }
    std::cout << "overall: " << overall << "\n";
  }
  return failed ? exit_failed : inconclusive ? exit_inconclusive : 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_bench(const Common& c, const std::string& cases_path, const std::string& suite, const std::string& fields,
              const std::string& strategies) {
  const auto cases = suite.empty() ? std::vector<PaperCase>{} : load_paper_cases(cases_path);
  BenchOptions options;
  options.threads = c.threads;
  if (c.time_limit) options.time_limit = std::chrono::milliseconds(static_cast<long>(*c.time_limit * 1000));
  options.fields.clear();
  for (const auto& f : split_list(fields)) options.fields.push_back(parse_field_tag(f));
  options.strategies.clear();
  for (const auto& s : split_list(strategies)) options.strategies.push_back(parse_pair_strategy(s));
  const auto rows = bench(suite, cases, options);

  // rows of one case must agree on the initial ideal across fields and strategies
  json table = json::array();
  bool consistent = true;
  for (const auto& row : rows) {
    table.push_back(to_json(row));
    for (const auto& other : rows) {
      if (other.case_id == row.case_id && row.status == "ok" && other.status == "ok" && other.initial_digest != row.initial_digest) {
        consistent = false;
      }
    }
  }
  if (c.format == "json") {
    emit({{"suite", suite}, {"rows", table}, {"initial_ideals_consistent", consistent}}, c.format);
  } else {
    std::cout << std::left << std::setw(12) << "case" << std::setw(9) << "field" << std::setw(17) << "strategy" << std::setw(9)
              << "status" << std::right << std::setw(10) << "time_s" << std::setw(12) << "peak_kb" << std::setw(7) << "size"
              << std::setw(11) << "reductions" << "  initial\n";
    for (const auto& row : rows) {
      std::cout << std::left << std::setw(12) << row.case_id << std::setw(9) << row.field << std::setw(17) << row.strategy
                << std::setw(9) << row.status << std::right << std::setw(10) << std::fixed << std::setprecision(3)
                << row.wall_time << std::setw(12) << row.peak_rss_kb << std::setw(7) << row.basis_size << std::setw(11)
                << row.reductions << "  " << row.initial_digest << "\n";
    }
    std::cout << "initial ideals consistent: " << (consistent ? "yes" : "no") << "\n";
  }
  return consistent ? 0 : exit_failed;
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

void add_compute(CLI::App* app, Common& c) {
  app->add_option("--field", c.field, "Coefficient field: q or p:<prime>")->capture_default_str();
  app->add_option("--threads", c.threads, "Worker threads for S-pair reduction (default: PFJET_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app->add_option("--strategy", c.strategy, "S-pair strategy: normal or normal-reversed")->capture_default_str();
  app->add_option("--degree-cap", c.degree_cap, "Abort when the next S-pair degree exceeds this");
  app->add_option("--time-limit", c.time_limit, "Abort after this many seconds");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jet schemes of pfaffian ideals: generators, Groebner bases, Hilbert series and predictions"};
  app.require_subcommand(1);
  Common c;
  c.threads = default_threads();
  int n = 0, k = 0, r = 0;
  std::string input, by, cases_path = std::string(PFJET_DATA_DIR) + "/paper_cases.json";
  std::string point = "crux", suite = "paper", fields = "p:32003,q", strategies = "normal,normal-reversed";
  std::uint64_t seed = 1;
  std::vector<std::string> ids;
  bool all = false;

  auto* gen = app.add_subcommand("gen", "Write the jet ideal generators I^{n,k}_r");
  gen->add_option("--n", n, "Matrix size")->required();
  gen->add_option("--k", k, "Jet order (entries mod t^k)")->required();
  gen->add_option("--r", r, "Pfaffian size 2r")->required();
  gen->add_option("-o,--output", c.output, "Output file (default stdout)");

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("input", input, "Ideal file")->required()->check(CLI::ExistingFile);
  gb->add_option("--order", c.order, "Monomial order: paper or elim");
  gb->add_option("-o,--output", c.output, "Basis file");
  add_compute(gb, c);
  add_format(gb, c);

  auto* hil = app.add_subcommand("hilbert", "Hilbert series, dimension and multiplicity");
  hil->add_option("input", input, "Basis, monomial-ideal or generator file")->required()->check(CLI::ExistingFile);
  hil->add_option("--order", c.order, "Monomial order: paper or elim");
  add_compute(hil, c);
  add_format(hil, c);

  auto* pred = app.add_subcommand("predict", "Closed-form invariants and component predictions");
  pred->add_option("--n", n, "Matrix size")->required();
  pred->add_option("--k", k, "Jet order")->required();
  pred->add_option("--r", r, "Pfaffian size 2r")->required();
  add_format(pred, c);

  auto* ver = app.add_subcommand("verify-paper", "Recompute registered golden cases and compare");
  ver->add_option("cases", ids, "Case ids, e.g. I_2^{5,3}");
  ver->add_flag("--all", all, "Run every registered case");
  ver->add_option("--cases-file", cases_path, "Golden case file")->capture_default_str();
  add_compute(ver, c);
  add_format(ver, c);

  auto* sat = app.add_subcommand("saturate", "Saturation I : f^infinity by elimination");
  sat->add_option("input", input, "Ideal file")->required()->check(CLI::ExistingFile);
  sat->add_option("--by", by, "Polynomial f, e.g. x[5,6,0]")->required();
  sat->add_option("--order", c.order, "Monomial order of the result: paper");
  sat->add_option("-o,--output", c.output, "Basis file");
  add_compute(sat, c);
  add_format(sat, c);

  auto* wit = app.add_subcommand("witness", "Evaluate a 6x6 witness point for 4-pfaffian jets");
  wit->add_option("--k", k, "Jet order")->required();
  wit->add_option("--point", point, "crux or u56")->capture_default_str();
  wit->add_option("--seed", seed, "Random seed for u56")->capture_default_str();
  wit->add_option("--field", c.field, "Coefficient field: q or p:<prime>")->capture_default_str();
  add_format(wit, c);

  auto* ben = app.add_subcommand("bench", "Time the golden cases per field and strategy");
  ben->add_option("--suite", suite, "Suite name: paper, or empty for no cases")->capture_default_str();
  ben->add_option("--cases-file", cases_path, "Golden case file")->capture_default_str();
  ben->add_option("--fields", fields, "Comma-separated fields")->capture_default_str();
  ben->add_option("--strategies", strategies, "Comma-separated S-pair strategies")->capture_default_str();
  ben->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  ben->add_option("--time-limit", c.time_limit, "Per-row limit in seconds");
  add_format(ben, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_usage;
  }

  try {
    if (*gen) return run_gen(c, n, k, r);
    if (*gb) return run_gb(c, input);
    if (*hil) return run_hilbert(c, input);
    if (*pred) return run_predict(c, n, k, r);
    if (*ver) return run_verify(c, cases_path, ids, all);
    if (*sat) return run_saturate(c, input, by);
    if (*wit) return run_witness(c, k, point, seed);
    if (*ben) return run_bench(c, cases_path, suite, fields, strategies);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return exit_inconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return 0;
}
