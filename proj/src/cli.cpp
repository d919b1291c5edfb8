#include "denum/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <istream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "denum/binner3.hpp"
#include "denum/closedform.hpp"
#include "denum/denumerant2.hpp"
#include "denum/oracle.hpp"

namespace denum::cli {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

const char* kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::count2: return "count2";
    case QueryKind::count3: return "count3";
    case QueryKind::fib: return "fib";
    case QueryKind::lucas: return "lucas";
    case QueryKind::oracle: return "oracle";
  }
  return "?";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::fib: return "fib";
    case Family::lucas: return "lucas";
    case Family::generic: return "generic";
  }
  return "?";
}

QuantityList tripathi_list(const TripathiQuantities& q) {
  return {{"a_prime", q.a_prime}, {"b_prime", q.b_prime}};
}

QuantityList binner_list(const BinnerQuantities& q) {
  return {{"b1p", q.b1p}, {"c1p", q.c1p}, {"c2p", q.c2p},
          {"a2p", q.a2p}, {"a3p", q.a3p}, {"b3p", q.b3p}, {"N1", q.n1}};
}

QuantityList fib_list(const FibQuantities& q) {
  return {{"B1", q.b1}, {"C2", q.c2}, {"A3", q.a3}, {"N2", q.n2}};
}

QuantityList lucas_list(const LucasQuantities& q) {
  return {{"B1", q.b1}, {"C2", q.c2}, {"A3", q.a3}, {"N3", q.n3}};
}

// Display labels for the text output; JSON keeps the ASCII keys.
std::string pretty_label(const std::string& key, QueryKind kind) {
  if (key == "a_prime") return "a'";
  if (key == "b_prime") return "b'";
  if (key == "b1p") return "b'1";
  if (key == "c1p") return "c'1";
  if (key == "c2p") return "c'2";
  if (key == "a2p") return "a'2";
  if (key == "a3p") return "a'3";
  if (key == "b3p") return "b'3";
  const bool lucas = kind == QueryKind::lucas;
  if (key == "B1") return lucas ? "B''1" : "B'1";
  if (key == "C2") return lucas ? "C''2" : "C'2";
  if (key == "A3") return lucas ? "A''3" : "A'3";
  return key;  // N1 / N2 / N3
}

bool pairwise_coprime(const Int& a, const Int& b, const Int& c) {
  return gcd_int(a, b) == 1 && gcd_int(a, c) == 1 && gcd_int(b, c) == 1;
}

struct Dispatch {
  Int count;
  std::string method_used;
  std::optional<QuantityList> quantities;
};

Dispatch via_dp(const std::vector<Int>& coeffs, const QuerySpec& spec) {
  Dispatch d;
  d.count = dp_count(coeffs, spec.n, DpOptions{spec.dp_budget});
  d.method_used = "oracle-dp";
  return d;
}

Dispatch via_count2(const QuerySpec& spec) {
  Dispatch d;
  d.count = count2(spec.coeffs[0], spec.coeffs[1], spec.n);
  d.method_used = "tripathi-formula";
  if (spec.show_quantities) {
    d.quantities = tripathi_list(tripathi_quantities(spec.coeffs[0], spec.coeffs[1], spec.n));
  }
  return d;
}

Dispatch via_count3(const Int& a, const Int& b, const Int& c, const QuerySpec& spec,
                    FloorSumMode mode) {
  Dispatch d;
  d.count = count3(a, b, c, spec.n, mode);
  d.method_used = mode == FloorSumMode::fast ? "binner-formula" : "binner-direct-sums";
  if (spec.show_quantities) {
    d.quantities = binner_list(binner_quantities(a, b, c, spec.n));
  }
  return d;
}

Dispatch run_count2(const QuerySpec& spec) {
  const Int& a = spec.coeffs[0];
  const Int& b = spec.coeffs[1];
  Method m = spec.method;
  if (m == Method::direct_sums) {
    m = Method::formula;  // the two-variable formula has no floor sums
  }
  if (m == Method::auto_select) {
    const bool formula_ok = a >= 1 && b >= 1 && gcd_int(a, b) == 1;
    m = formula_ok ? Method::formula : Method::oracle;
  }
  return m == Method::formula ? via_count2(spec) : via_dp(spec.coeffs, spec);
}

Dispatch run_count3(const QuerySpec& spec) {
  const Int& a = spec.coeffs[0];
  const Int& b = spec.coeffs[1];
  const Int& c = spec.coeffs[2];
  Method m = spec.method;
  if (m == Method::auto_select) {
    const bool formula_ok = a >= 1 && b >= 1 && c >= 1 && pairwise_coprime(a, b, c);
    m = formula_ok ? Method::formula : Method::oracle;
  }
  switch (m) {
    case Method::formula: return via_count3(a, b, c, spec, FloorSumMode::fast);
    case Method::direct_sums: return via_count3(a, b, c, spec, FloorSumMode::direct);
    default: return via_dp(spec.coeffs, spec);
  }
}

Dispatch run_sequence_triple(const QuerySpec& spec) {
  const bool is_fib = spec.kind == QueryKind::fib;
  const SeqIndex i = spec.index;
  const SeqIndex min_index = is_fib ? 3 : 2;
  const Int a = is_fib ? fib(i) : lucas(i);
  const Int b = is_fib ? fib(i + 1) : lucas(i + 1);
  const Int c = is_fib ? fib(i + 2) : lucas(i + 2);

  auto closed = [&] {
    Dispatch d;
    if (is_fib) {
      d.count = count_fib(i, spec.n);
      d.method_used = "fib-closed-form";
      if (spec.show_quantities) {
        d.quantities = fib_list(fib_quantities(i, spec.n));
      }
    } else {
      d.count = count_lucas(i, spec.n);
      d.method_used = "lucas-closed-form";
      if (spec.show_quantities) {
        d.quantities = lucas_list(lucas_quantities(i, spec.n));
      }
    }
    return d;
  };

  switch (spec.method) {
    case Method::formula:
      return closed();  // throws UnsupportedIndexError below min_index
    case Method::auto_select:
      // Consecutive Fibonacci/Lucas triples are pairwise coprime, so
      // indices below the closed form's minimum fall back to the
      // general formula rather than the oracle.
      return i >= min_index ? closed() : via_count3(a, b, c, spec, FloorSumMode::fast);
    case Method::direct_sums:
      return via_count3(a, b, c, spec, FloorSumMode::direct);
    default:
      return via_dp({a, b, c}, spec);
  }
}

Dispatch run_oracle(const QuerySpec& spec) {
  if (spec.prefer_brute) {
    Dispatch d;
    d.count = brute_count(spec.coeffs, spec.n, BruteOptions{spec.brute_budget});
    d.method_used = "oracle-brute";
    return d;
  }
  return via_dp(spec.coeffs, spec);
}

void require_coeff_count(const QuerySpec& spec) {
  const std::size_t have = spec.coeffs.size();
  switch (spec.kind) {
    case QueryKind::count2:
      if (have != 2) throw std::invalid_argument("count2 expects exactly 2 coefficients");
      break;
    case QueryKind::count3:
      if (have != 3) throw std::invalid_argument("count3 expects exactly 3 coefficients");
      break;
    case QueryKind::oracle:
      if (have < 1) throw std::invalid_argument("oracle expects at least 1 coefficient");
      break;
    default:
      break;
  }
}

std::string quantities_text(const QuantityList& list, QueryKind kind) {
  std::string out;
  for (const auto& [key, value] : list) {
    out += pretty_label(key, kind) + " = " + value.get_str() + "\n";
  }
  return out;
}

}  // namespace

CountResult run_query(const QuerySpec& spec) {
  require_coeff_count(spec);
  const auto start = Clock::now();
  Dispatch d;
  switch (spec.kind) {
    case QueryKind::count2: d = run_count2(spec); break;
    case QueryKind::count3: d = run_count3(spec); break;
    case QueryKind::fib:
    case QueryKind::lucas: d = run_sequence_triple(spec); break;
    case QueryKind::oracle: d = run_oracle(spec); break;
  }
  CountResult result;
  result.count = std::move(d.count);
  result.method_used = std::move(d.method_used);
  result.quantities = std::move(d.quantities);
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

VerifyReport run_verify(const VerifyGrid& grid) {
  if (grid.n_max < 0) {
    throw std::invalid_argument("verify: n-max must be >= 0");
  }
  const DpOptions dp_opts;
  if (static_cast<std::uint64_t>(grid.n_max) + 1 > dp_opts.max_table_entries) {
    throw ResourceError("verify: n-max of " + std::to_string(grid.n_max) +
                        " exceeds the oracle table budget");
  }

  VerifyReport report;
  auto mismatch = [&report](std::string detail) {
    if (report.mismatches == 0) {
      report.first_mismatch = std::move(detail);
    }
    ++report.mismatches;
  };

  if (grid.family == Family::fib || grid.family == Family::lucas) {
    const bool is_fib = grid.family == Family::fib;
    const SeqIndex lo = std::max<SeqIndex>(grid.i_min, is_fib ? 3 : 2);
    if (lo > grid.i_max) {
      throw std::invalid_argument("verify: empty index range");
    }
    for (SeqIndex i = lo; i <= grid.i_max; ++i) {
      const Int a = is_fib ? fib(i) : lucas(i);
      const Int b = is_fib ? fib(i + 1) : lucas(i + 1);
      const Int c = is_fib ? fib(i + 2) : lucas(i + 2);
      const std::vector<Int> table = dp_table({a, b, c}, grid.n_max, dp_opts);
      for (std::int64_t n = 0; n <= grid.n_max; ++n) {
        const Int closed = is_fib ? count_fib(i, n) : count_lucas(i, n);
        const Int general = count3(a, b, c, n);
        const Int& oracle = table[static_cast<std::size_t>(n)];
        ++report.comparisons;
        if (closed != oracle || general != oracle) {
          QuerySpec q;
          q.kind = is_fib ? QueryKind::fib : QueryKind::lucas;
          const QuantityList closed_q = is_fib ? fib_list(fib_quantities(i, n))
                                               : lucas_list(lucas_quantities(i, n));
          mismatch("family=" + std::string(family_name(grid.family)) + " i=" +
                   std::to_string(i) + " n=" + std::to_string(n) + ": closed-form=" +
                   closed.get_str() + " general=" + general.get_str() + " oracle=" +
                   oracle.get_str() + "\n" + quantities_text(closed_q, q.kind) +
                   quantities_text(binner_list(binner_quantities(a, b, c, n)),
                                   QueryKind::count3));
        }
      }
    }
    return report;
  }

  // Generic family: every pairwise-coprime triple up to max_coeff ...
  for (std::int64_t a = 1; a <= grid.max_coeff; ++a) {
    for (std::int64_t b = 1; b <= grid.max_coeff; ++b) {
      for (std::int64_t c = 1; c <= grid.max_coeff; ++c) {
        if (!pairwise_coprime(a, b, c)) {
          continue;
        }
        const std::vector<Int> table = dp_table({Int(a), Int(b), Int(c)}, grid.n_max);
        for (std::int64_t n = 0; n <= grid.n_max; ++n) {
          const Int general = count3(a, b, c, n);
          ++report.comparisons;
          if (general != table[static_cast<std::size_t>(n)]) {
            mismatch("family=generic a=" + std::to_string(a) + " b=" + std::to_string(b) +
                     " c=" + std::to_string(c) + " n=" + std::to_string(n) + ": general=" +
                     general.get_str() + " oracle=" +
                     table[static_cast<std::size_t>(n)].get_str() + "\n" +
                     quantities_text(binner_list(binner_quantities(a, b, c, n)),
                                     QueryKind::count3));
          }
        }
      }
    }
  }

  // ... plus seeded sweeps of the floor-sum equivalence and the
  // reciprocity identity.
  std::mt19937_64 rng(grid.seed);
  std::uniform_int_distribution<std::int64_t> small(0, 10'000);
  for (std::uint64_t s = 0; s < grid.samples; ++s) {
    const Int upper = small(rng);
    const Int num = small(rng);
    const Int den = small(rng) + 1;
    ++report.comparisons;
    const Int fast = floor_sum_fast(upper, num, den);
    const Int direct = floor_sum_direct(upper, num, den);
    if (fast != direct) {
      mismatch("floor-sum upper=" + upper.get_str() + " num=" + num.get_str() + " den=" +
               den.get_str() + ": fast=" + fast.get_str() + " direct=" + direct.get_str());
    }
  }
  std::uniform_int_distribution<std::int64_t> big_a(2, 1'000'000);
  for (std::uint64_t s = 0; s < grid.samples; ++s) {
    const std::int64_t a = big_a(rng);
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, a - 1)(rng);
    std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, a - 1)(rng);
    while (gcd_int(a, c) != 1) {
      c = std::uniform_int_distribution<std::int64_t>(1, a - 1)(rng);
    }
    ++report.comparisons;
    const ReciprocitySides sides = reciprocity_sides(a, b, c);
    if (sides.lhs != sides.rhs) {
      mismatch("reciprocity a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
               std::to_string(c) + ": lhs=" + sides.lhs.get_str() + " rhs=" +
               sides.rhs.get_str());
    }
  }
  return report;
}

namespace {

template <typename F>
BenchRow time_case(const std::string& case_name, const std::string& method, const Int& n,
                   int reps, F&& f) {
  BenchRow row;
  row.case_name = case_name;
  row.method = method;
  row.n = n.get_str();
  row.reps = reps;
  row.count = "-";
  row.status = "ok";
  try {
    std::vector<std::int64_t> times;
    times.reserve(static_cast<std::size_t>(reps));
    Int last;
    for (int r = 0; r < reps; ++r) {
      const auto t0 = Clock::now();
      last = f();
      const auto t1 = Clock::now();
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    row.median_ns = times[times.size() / 2];
    row.count = last.get_str();
  } catch (const ResourceError&) {
    row.status = "refused";
    row.reps = 0;
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  const DpOptions dp_opts{opts.dp_budget};
  const BruteOptions brute_opts{opts.brute_budget};

  const Int n_golden = 425896;
  const std::vector<Int> fib12{fib(12), fib(13), fib(14)};
  rows.push_back(time_case("fib-i12", "fib-closed-form", n_golden, opts.reps,
                           [&] { return count_fib(12, n_golden); }));
  rows.push_back(time_case("fib-i12", "binner-formula", n_golden, opts.reps,
                           [&] { return count3(fib12[0], fib12[1], fib12[2], n_golden); }));
  rows.push_back(time_case("fib-i12", "oracle-dp", n_golden, opts.reps,
                           [&] { return dp_count(fib12, n_golden, dp_opts); }));

  const Int n_big("1000000000000000000");
  const std::vector<Int> fib40{fib(40), fib(41), fib(42)};
  rows.push_back(time_case("fib-i40", "fib-closed-form", n_big, opts.reps,
                           [&] { return count_fib(40, n_big); }));
  rows.push_back(time_case("fib-i40", "binner-formula", n_big, opts.reps,
                           [&] { return count3(fib40[0], fib40[1], fib40[2], n_big); }));
  rows.push_back(time_case("fib-i40", "oracle-dp", n_big, opts.reps,
                           [&] { return dp_count(fib40, n_big, dp_opts); }));

  for (long exp = 1000; exp <= 1'000'000; exp *= 10) {
    const Int n(exp);
    rows.push_back(time_case("count2-a3-b5", "tripathi-formula", n, opts.reps,
                             [&] { return count2(3, 5, n); }));
    rows.push_back(time_case("count2-a3-b5", "oracle-brute", n, opts.reps,
                             [&] { return brute_count({3, 5}, n, brute_opts); }));
  }
  return rows;
}

std::string to_json_line(const QuerySpec& spec, const CountResult& result) {
  ordered_json j;
  j["kind"] = kind_name(spec.kind);
  ordered_json inputs;
  switch (spec.kind) {
    case QueryKind::count2:
      inputs["a"] = spec.coeffs[0].get_str();
      inputs["b"] = spec.coeffs[1].get_str();
      break;
    case QueryKind::count3:
      inputs["a"] = spec.coeffs[0].get_str();
      inputs["b"] = spec.coeffs[1].get_str();
      inputs["c"] = spec.coeffs[2].get_str();
      break;
    case QueryKind::fib:
    case QueryKind::lucas:
      inputs["i"] = std::to_string(spec.index);
      break;
    case QueryKind::oracle: {
      ordered_json coeffs = ordered_json::array();
      for (const Int& c : spec.coeffs) {
        coeffs.push_back(c.get_str());
      }
      inputs["coeffs"] = coeffs;
      break;
    }
  }
  inputs["n"] = spec.n.get_str();
  j["inputs"] = inputs;
  j["count"] = result.count.get_str();
  j["method_used"] = result.method_used;
  if (result.quantities.has_value()) {
    ordered_json q;
    for (const auto& [key, value] : *result.quantities) {
      q[key] = value.get_str();
    }
    j["quantities"] = q;
  }
  j["elapsed_ns"] = static_cast<std::int64_t>(result.elapsed.count());
  return j.dump();
}

std::string to_text(const QuerySpec& spec, const CountResult& result) {
  std::string out = "count = " + result.count.get_str() + "\n";
  out += "method = " + result.method_used + "\n";
  if (result.quantities.has_value()) {
    out += quantities_text(*result.quantities, spec.kind);
  }
  out += "elapsed_ns = " + std::to_string(result.elapsed.count()) + "\n";
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "case,method,n,reps,median_ns,count,status\n";
  for (const BenchRow& r : rows) {
    out += r.case_name + "," + r.method + "," + r.n + "," + std::to_string(r.reps) + "," +
           std::to_string(r.median_ns) + "," + r.count + "," + r.status + "\n";
  }
  return out;
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const BenchRow& r : rows) {
    ordered_json j;
    j["case"] = r.case_name;
    j["method"] = r.method;
    j["n"] = r.n;
    j["reps"] = r.reps;
    j["median_ns"] = r.median_ns;
    j["count"] = r.count;
    j["status"] = r.status;
    arr.push_back(j);
  }
  return arr.dump();
}

std::string verify_text(const VerifyGrid& grid, const VerifyReport& report) {
  std::string out = "family=" + std::string(family_name(grid.family));
  if (grid.family == Family::generic) {
    out += " max-coeff=" + std::to_string(grid.max_coeff);
  } else {
    out += " i=[" + std::to_string(grid.i_min) + "," + std::to_string(grid.i_max) + "]";
  }
  out += " n=[0," + std::to_string(grid.n_max) + "]";
  out += ": comparisons=" + std::to_string(report.comparisons) +
         " mismatches=" + std::to_string(report.mismatches) + "\n";
  if (report.mismatches > 0) {
    out += "first mismatch:\n" + report.first_mismatch + "\n";
  }
  return out;
}

BatchOutcome run_batch(std::istream& in, const QuerySpec& defaults, bool json) {
  BatchOutcome outcome;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
    if (std::all_of(line.begin(), line.end(), is_space)) {
      continue;
    }
    try {
      const QuerySpec spec = parse_query_line(line, defaults);
      const CountResult result = run_query(spec);
      outcome.lines.push_back(json ? to_json_line(spec, result) : result.count.get_str());
    } catch (const std::exception& e) {
      ++outcome.failures;
      if (json) {
        ordered_json j;
        j["error"] = error_category(e);
        j["detail"] = e.what();
        outcome.lines.push_back(j.dump());
      } else {
        outcome.lines.push_back(std::string("error: ") + error_category(e) + ": " + e.what());
      }
    }
  }
  return outcome;
}

QuerySpec parse_query_line(const std::string& line, const QuerySpec& defaults) {
  std::istringstream iss(line);
  std::vector<std::string> tok;
  std::string word;
  while (iss >> word) {
    tok.push_back(word);
  }
  if (tok.empty()) {
    throw std::invalid_argument("batch: empty query");
  }

  QuerySpec spec = defaults;
  spec.coeffs.clear();
  const std::string& kind = tok[0];
  const auto need = [&](std::size_t args) {
    if (tok.size() != args + 1) {
      throw std::invalid_argument("batch: '" + kind + "' expects " + std::to_string(args) +
                                  " arguments, got " + std::to_string(tok.size() - 1));
    }
  };

  if (kind == "count2") {
    need(3);
    spec.kind = QueryKind::count2;
    spec.coeffs = {parse_int(tok[1]), parse_int(tok[2])};
    spec.n = parse_int(tok[3]);
  } else if (kind == "count3") {
    need(4);
    spec.kind = QueryKind::count3;
    spec.coeffs = {parse_int(tok[1]), parse_int(tok[2]), parse_int(tok[3])};
    spec.n = parse_int(tok[4]);
  } else if (kind == "fib" || kind == "lucas") {
    need(2);
    spec.kind = kind == "fib" ? QueryKind::fib : QueryKind::lucas;
    const Int i = parse_int(tok[1]);
    if (!i.fits_slong_p()) {
      throw std::invalid_argument("batch: sequence index out of range: " + tok[1]);
    }
    spec.index = i.get_si();
    spec.n = parse_int(tok[2]);
  } else if (kind == "oracle") {
    if (tok.size() < 3) {
      throw std::invalid_argument("batch: 'oracle' expects at least 2 arguments");
    }
    spec.kind = QueryKind::oracle;
    for (std::size_t k = 1; k + 1 < tok.size(); ++k) {
      spec.coeffs.push_back(parse_int(tok[k]));
    }
    spec.n = parse_int(tok.back());
  } else {
    throw std::invalid_argument("batch: unknown query kind '" + kind + "'");
  }
  return spec;
}

Int parse_int(const std::string& text) {
  const auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
      return std::isdigit(ch) != 0;
    });
  };

  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    const Int base = parse_int(text.substr(0, caret));
    const std::string exp_part = text.substr(caret + 1);
    if (!all_digits(exp_part) || exp_part.size() > 7) {
      throw std::invalid_argument("not a valid exponent: '" + text + "'");
    }
    const unsigned long exponent = std::stoul(exp_part);
    if (exponent > 1'000'000) {
      throw std::invalid_argument("exponent too large in '" + text + "'");
    }
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
  }

  std::string digits = text;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("not a valid integer: '" + text + "'");
  }
  Int value(digits);
  return negative ? Int(-value) : value;
}

const char* error_category(const std::exception& e) {
  if (dynamic_cast<const IntegralityError*>(&e) != nullptr) return "integrality";
  if (dynamic_cast<const ResourceError*>(&e) != nullptr) return "resource";
  if (dynamic_cast<const NotInvertibleError*>(&e) != nullptr) return "not-invertible";
  if (dynamic_cast<const NotCoprimeError*>(&e) != nullptr) return "not-coprime";
  if (dynamic_cast<const UnsupportedIndexError*>(&e) != nullptr) return "unsupported-index";
  if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) return "invalid-argument";
  return "error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IntegralityError*>(&e) != nullptr) return 4;
  if (dynamic_cast<const ResourceError*>(&e) != nullptr) return 3;
  return 2;
}

}  // namespace denum::cli
