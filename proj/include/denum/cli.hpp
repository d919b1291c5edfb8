#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "denum/arith.hpp"
#include "denum/sequences.hpp"

namespace denum::cli {

enum class QueryKind { count2, count3, fib, lucas, oracle };

enum class Method { auto_select, formula, direct_sums, oracle };

struct QuerySpec {
  QueryKind kind = QueryKind::count2;
  std::vector<Int> coeffs;  // count2: {a,b}; count3: {a,b,c}; oracle: 1+
  SeqIndex index = 0;       // fib / lucas
  Int n = 0;
  Method method = Method::auto_select;
  bool show_quantities = false;
  bool prefer_brute = false;  // oracle kind: nested enumeration over dp
  std::uint64_t brute_budget = 100'000'000;
  std::uint64_t dp_budget = 10'000'000;
};

// Ordered (json-key, value) pairs; the key order is the emission order.
using QuantityList = std::vector<std::pair<std::string, Int>>;

struct CountResult {
  Int count;
  std::string method_used;
  std::optional<QuantityList> quantities;  // set iff a formula ran and was asked for
  std::chrono::nanoseconds elapsed{0};
};

// Dispatches to the right counting module. method auto prefers the
// closed form (fib/lucas at a supported index), then the general
// three-variable formula (pairwise coprime), then the oracle.
CountResult run_query(const QuerySpec& spec);

enum class Family { fib, lucas, generic };

struct VerifyGrid {
  Family family = Family::fib;
  SeqIndex i_min = 3;        // fib/lucas families
  SeqIndex i_max = 8;
  std::int64_t n_max = 300;
  std::int64_t max_coeff = 12;   // generic family
  std::uint64_t samples = 1000;  // randomized identity sweeps (generic)
  std::uint64_t seed = 12345;
};

struct VerifyReport {
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;  // empty when clean
};

// Compares closed form (when the family has one), general formula and
// dp oracle on every grid point; the generic family additionally sweeps
// the floor-sum fast/direct equivalence and the reciprocity identity on
// seeded random inputs.
VerifyReport run_verify(const VerifyGrid& grid);

struct BenchOptions {
  int reps = 5;
  std::uint64_t brute_budget = 100'000'000;
  std::uint64_t dp_budget = 10'000'000;
};

struct BenchRow {
  std::string case_name;
  std::string method;
  std::string n;       // decimal
  int reps = 0;
  std::int64_t median_ns = 0;
  std::string count;   // decimal; "-" when refused
  std::string status;  // "ok" or "refused"
};

// Fixed ladder contrasting the O(1) formulas with the O(n) oracle:
// the golden three-variable query, a large-index/large-n query the
// oracle must refuse, and a two-variable ladder where enumeration cost
// grows linearly while the formula stays flat.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

// --- formatting -----------------------------------------------------

// Compact single-line JSON with stable field order:
// kind, inputs, count, method_used, quantities (optional), elapsed_ns.
// All potentially large integers are decimal strings.
std::string to_json_line(const QuerySpec& spec, const CountResult& result);

// Human-readable `key = value` lines.
std::string to_text(const QuerySpec& spec, const CountResult& result);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);
std::string verify_text(const VerifyGrid& grid, const VerifyReport& report);

// --- batch ----------------------------------------------------------

// One query per line in subcommand syntax (`count3 2 3 5 10`); blank
// lines and `#` comments are skipped. Invalid lines produce an error
// line in place and are tallied in `failures`; processing continues.
struct BatchOutcome {
  std::vector<std::string> lines;  // one per query, input order
  std::uint64_t failures = 0;
};
BatchOutcome run_batch(std::istream& in, const QuerySpec& defaults, bool json);

// Parses a single batch line; `defaults` supplies method and budgets.
QuerySpec parse_query_line(const std::string& line, const QuerySpec& defaults);

// Integer literal: optional sign and decimal digits, or `base^exp`.
Int parse_int(const std::string& text);

// Machine-parsable category for the one-line error reason.
const char* error_category(const std::exception& e);

// Process exit code for a failed query: 4 integrality, 3 resource,
// 2 anything else (validation).
int exit_code_for(const std::exception& e);

}  // namespace denum::cli
