#pragma once

// Golden-case driver: runs gen -> gb -> (saturate) -> hilbert on registered
// cases and diffs the results against expected values. Also the benchmark
// harness over the same cases.

#include "pfjet/groebner.hpp"
#include "pfjet/hilbert.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace pfjet {

struct ExpectedValue {
  std::string name;
  nlohmann::json value;
  std::string source;
};

struct PaperCase {
  std::string id;
  int n = 0;
  int k = 0;
  int r = 0;
  /// Variable to saturate by, e.g. "x[5,6,0]".
  std::optional<std::string> saturate_by;
  std::vector<ExpectedValue> expected;
};

std::vector<PaperCase> parse_paper_cases(const nlohmann::json& doc);
std::vector<PaperCase> load_paper_cases(const std::string& path);
const PaperCase& find_case(const std::vector<PaperCase>& cases, const std::string& id);

struct RunOptions {
  FieldTag field{FieldTag::Kind::rationals, 0};
  unsigned threads = 1;
  PairStrategy strategy = PairStrategy::normal;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<int> degree_cap;
};

struct ComputedCase {
  MonomialIdeal initial;
  HilbertSeries series;
  std::size_t basis_size = 0;
  GbStats stats;
};

/// Generators, Groebner basis (of the saturation when requested), initial
/// ideal and reduced Hilbert series. Throws ResourceLimitExceeded.
ComputedCase compute_case(const PaperCase& c, const RunOptions& options);

enum class CaseStatus { pass, fail, inconclusive };
std::string to_string(CaseStatus s);

struct CheckResult {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  std::string source;
};

struct CaseReport {
  std::string id;
  std::string field;
  CaseStatus status = CaseStatus::fail;
  std::vector<CheckResult> checks;
  std::string note;
  double wall_time = 0.0;
};

/// Evaluates one expectation against a computed case; unknown names throw.
CheckResult evaluate_expectation(const ExpectedValue& e, const ComputedCase& computed);

CaseReport verify_paper(const PaperCase& c, const RunOptions& options);
nlohmann::json to_json(const CaseReport& report);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const mpz_class& v);
nlohmann::json to_json(const std::vector<mpz_class>& v);

struct BenchRow {
  std::string case_id;
  std::string field;
  std::string strategy;
  std::string status;
  double wall_time = 0.0;
  long peak_rss_kb = -1;
  std::size_t basis_size = 0;
  std::size_t reductions = 0;
  std::string initial_digest;
};

struct BenchOptions {
  std::vector<FieldTag> fields{FieldTag{FieldTag::Kind::prime, 32003}, FieldTag{FieldTag::Kind::rationals, 0}};
  std::vector<PairStrategy> strategies{PairStrategy::normal, PairStrategy::normal_reversed};
  unsigned threads = 1;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Suite "paper" runs every registered case; an empty suite name yields no rows.
std::vector<BenchRow> bench(const std::string& suite, const std::vector<PaperCase>& cases, const BenchOptions& options);
nlohmann::json to_json(const BenchRow& row);

/// Resets the peak resident set size where the kernel allows it.
void reset_peak_rss();
/// VmHWM in kB, or -1 when unavailable.
long peak_rss_kb();

/// Stable 64-bit FNV-1a digest of the initial ideal's text form, as hex.
std::string digest(const MonomialIdeal& ideal);

}  // namespace pfjet
