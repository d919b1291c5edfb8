// End-to-end release gates. Each gate prints exactly one PASS/FAIL line;
// the process exits nonzero if any gate fails. The built CLI binary is
// passed as argv[1] for the gates that drive it from the outside.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "denum/binner3.hpp"
#include "denum/closedform.hpp"
#include "denum/denumerant2.hpp"
#include "denum/oracle.hpp"
#include "subprocess.hpp"

using namespace denum;
using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

// Oracle count for 123x + 199y + 322z = 394072, recorded from dp_count
// ahead of the build. A published walk-through of this example prints
// 9532, which contradicts its own intermediate quantities (B''1=65,
// C''2=74, A''3=168, N3=-62942409684); the enumeration value below is
// the ground truth and criterion 3 re-derives it on every run.
const long kLucasGoldenCount = 9866;

std::string g_cli;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;

  template <typename F>
  void run(int id, const std::string& label, F&& body) {
    bool pass = false;
    std::string detail;
    try {
      std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %2d: %s%s%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " [", detail.c_str(), detail.empty() ? "" : "]");
    std::fflush(stdout);
    if (!pass) {
      ++failures;
    }
  }
};

struct DivisibilitySweep {
  bool ran = false;
  bool ok = false;
};

using GateResult = std::pair<bool, std::string>;

GateResult fib_golden_cli() {
  const auto res = testutil::run_cli(g_cli, "fib 12 425896 --show-quantities --json");
  if (res.exit_code != 0) {
    return {false, "exit code " + std::to_string(res.exit_code)};
  }
  const ordered_json j = ordered_json::parse(res.out);
  const bool values_ok = j["count"] == "7178" && j["quantities"]["B1"] == "88" &&
                         j["quantities"]["C2"] == "162" && j["quantities"]["A3"] == "205" &&
                         j["quantities"]["N2"] == "-342183561408";
  const std::int64_t elapsed_ns = j["elapsed_ns"].get<std::int64_t>();

  const auto t0 = Clock::now();
  const Int direct = count_fib(12, 425896);
  const double direct_ms = ms_since(t0);

  const bool ok = values_ok && direct == 7178 && elapsed_ns < 10'000'000 && direct_ms < 10.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "cli %.3f ms, in-process %.3f ms", elapsed_ns / 1e6, direct_ms);
  return {ok, buf};
}

GateResult three_way_golden() {
  const Int via_binner = count3(144, 233, 377, 425896);
  const auto t0 = Clock::now();
  const Int via_dp = dp_count({144, 233, 377}, 425896);
  const double dp_ms = ms_since(t0);
  const bool ok = via_binner == 7178 && via_dp == 7178 && dp_ms < 5000.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "count3=%s dp=%s in %.0f ms", via_binner.get_str().c_str(),
                via_dp.get_str().c_str(), dp_ms);
  return {ok, buf};
}

GateResult lucas_golden_cli() {
  const auto res = testutil::run_cli(g_cli, "lucas 10 394072 --show-quantities --json");
  if (res.exit_code != 0) {
    return {false, "exit code " + std::to_string(res.exit_code)};
  }
  const ordered_json j = ordered_json::parse(res.out);
  const bool quantities_ok = j["quantities"]["B1"] == "65" && j["quantities"]["C2"] == "74" &&
                             j["quantities"]["A3"] == "168" &&
                             j["quantities"]["N3"] == "-62942409684";
  const Int oracle = dp_count({123, 199, 322}, 394072);
  const bool ok = quantities_ok && oracle == kLucasGoldenCount &&
                  j["count"] == std::to_string(kLucasGoldenCount);
  return {ok, "count " + std::string(j["count"].get<std::string>()) + ", oracle " +
                  oracle.get_str() + " (a published 9532 is wrong; oracle rules)"};
}

GateResult grid(bool is_fib, SeqIndex i_lo, SeqIndex i_hi, long n_max, DivisibilitySweep& div) {
  const auto t0 = Clock::now();
  std::uint64_t comparisons = 0, mismatches = 0;
  div.ran = true;
  div.ok = true;
  for (SeqIndex i = i_lo; i <= i_hi; ++i) {
    const Int a = is_fib ? fib(i) : lucas(i);
    const Int b = is_fib ? fib(i + 1) : lucas(i + 1);
    const Int c = is_fib ? fib(i + 2) : lucas(i + 2);
    const Int divisor = 2 * a * b * c;
    const std::vector<Int> table = dp_table({a, b, c}, n_max);
    for (long n = 0; n <= n_max; ++n) {
      const Int closed = is_fib ? count_fib(i, n) : count_lucas(i, n);
      const Int general = count3(a, b, c, n);
      const Int& oracle = table[static_cast<std::size_t>(n)];
      ++comparisons;
      if (closed != oracle || general != oracle) {
        ++mismatches;
      }
      const Int special = is_fib ? fib_quantities(i, n).n2 : lucas_quantities(i, n).n3;
      if (special % divisor != 0 || binner_quantities(a, b, c, n).n1 % divisor != 0) {
        div.ok = false;
      }
    }
  }
  const double elapsed = ms_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%" PRIu64 " comparisons, %" PRIu64 " mismatches, %.0f ms",
                comparisons, mismatches, elapsed);
  return {mismatches == 0 && elapsed < 60'000.0, buf};
}

GateResult count2_grid() {
  const long n_max = 2000;
  std::uint64_t comparisons = 0, mismatches = 0;
  std::vector<long> hits(static_cast<std::size_t>(n_max) + 1);
  for (long a = 1; a <= 50; ++a) {
    for (long b = a + 1; b <= 50; ++b) {
      if (gcd_int(a, b) != 1) {
        continue;
      }
      // Independent oracle: enumerate every solution with value <= n_max
      // once and bucket by value.
      std::fill(hits.begin(), hits.end(), 0L);
      for (long x = 0; a * x <= n_max; ++x) {
        for (long y = 0; a * x + b * y <= n_max; ++y) {
          ++hits[static_cast<std::size_t>(a * x + b * y)];
        }
      }
      for (long n = 0; n <= n_max; ++n) {
        const Int counted = count2(a, b, n);
        ++comparisons;
        if (counted != hits[static_cast<std::size_t>(n)] ||
            count2(a, b, n + a * b) != counted + 1) {
          ++mismatches;
        }
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%" PRIu64 " comparisons, %" PRIu64 " mismatches", comparisons,
                mismatches);
  return {mismatches == 0, buf};
}

GateResult reciprocity_sweep() {
  std::mt19937_64 rng(20250810);
  std::uniform_int_distribution<long> as(2, 1'000'000);
  std::uint64_t mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const long a = as(rng);
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    long c = std::uniform_int_distribution<long>(1, a - 1)(rng);
    while (gcd_int(a, c) != 1) {
      c = std::uniform_int_distribution<long>(1, a - 1)(rng);
    }
    const ReciprocitySides sides = reciprocity_sides(a, b, c);
    if (sides.lhs != sides.rhs) {
      ++mismatches;
    }
  }
  return {mismatches == 0, "1000 samples, " + std::to_string(mismatches) + " mismatches"};
}

GateResult floor_sum_sweep() {
  std::mt19937_64 rng(424242);
  const long pow10[7] = {1, 10, 100, 1000, 10'000, 100'000, 1'000'000};
  std::uint64_t mismatches = 0, samples = 0;
  const auto check = [&](long upper, long num, long den) {
    ++samples;
    if (floor_sum_fast(upper, num, den) != floor_sum_direct(upper, num, den)) {
      ++mismatches;
    }
  };
  check(0, 1, 1);
  check(1'000'000, 999'983, 1'000'003);
  check(1'000'000, 1'000'000, 1);
  check(1'000'000, 0, 5);
  check(1, 1'000'000, 1'000'000);
  while (samples < 10'000) {
    // upper is sampled log-uniformly so the literal-summation oracle
    // stays affordable while all magnitudes get exercised.
    const long scale = pow10[std::uniform_int_distribution<int>(0, 6)(rng)];
    const long upper = std::uniform_int_distribution<long>(0, scale)(rng);
    const long num = std::uniform_int_distribution<long>(0, 1'000'000)(rng);
    const long den = std::uniform_int_distribution<long>(1, 1'000'000)(rng);
    check(upper, num, den);
  }
  return {mismatches == 0, "10000 samples, " + std::to_string(mismatches) + " mismatches"};
}

GateResult divisibility(const DivisibilitySweep& fib_div, const DivisibilitySweep& lucas_div) {
  const bool ok = fib_div.ran && lucas_div.ran && fib_div.ok && lucas_div.ok;
  return {ok, ok ? "2abc | N1, N2, N3 across the criterion 4-5 grids"
                 : "divisibility failed or grids did not run"};
}

GateResult derived_residues() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> ns(0, 1'000'000'000'000L);
  std::uint64_t checked = 0, bad = 0;
  for (int family = 0; family < 2; ++family) {
    const bool is_fib = family == 0;
    for (SeqIndex i = is_fib ? 3 : 2; i <= 40; ++i) {
      const Int a = is_fib ? fib(i) : lucas(i);
      const Int b = is_fib ? fib(i + 1) : lucas(i + 1);
      const Int c = is_fib ? fib(i + 2) : lucas(i + 2);
      for (int t = 0; t < 100; ++t) {
        const Int n(ns(rng));
        const BinnerQuantities q = binner_quantities(a, b, c, n);
        ++checked;
        if (q.c1p != 1 || q.a2p != 1 || q.b3p != c - 1) {
          ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " triples checked, " + std::to_string(bad) +
                        " violations"};
}

GateResult scale_demo() {
  const Int n_big("1000000000000000000");
  const auto res = testutil::run_cli(g_cli, "fib 40 1000000000000000000 --method formula --json");
  if (res.exit_code != 0) {
    return {false, "exit code " + std::to_string(res.exit_code)};
  }
  const ordered_json j = ordered_json::parse(res.out);
  const std::int64_t elapsed_ns = j["elapsed_ns"].get<std::int64_t>();
  const Int in_process = count_fib(40, n_big);
  const auto caret = testutil::run_cli(g_cli, "fib 40 10^18 --method formula --json");
  const bool caret_ok = caret.exit_code == 0 &&
                        ordered_json::parse(caret.out)["count"] == in_process.get_str();
  const bool ok = j["count"] == in_process.get_str() && elapsed_ns < 100'000'000 && caret_ok;
  char buf[96];
  std::snprintf(buf, sizeof buf, "count %s in %.3f ms", in_process.get_str().c_str(),
                elapsed_ns / 1e6);
  return {ok, buf};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-denum>\n");
    return 1;
  }
  g_cli = argv[1];

  Gate gate;
  DivisibilitySweep fib_div, lucas_div;

  gate.run(1, "fib 12 425896 == 7178 with quantities 88/162/205/-342183561408, < 10 ms",
           fib_golden_cli);
  gate.run(2, "count3 and dp_count independently reproduce 7178, dp < 5 s", three_way_golden);
  gate.run(3, "lucas 10 394072 quantities 65/74/168/-62942409684; count == dp oracle",
           lucas_golden_cli);
  gate.run(4, "fib grid i in [3,12], n in [0,2000]: closed == general == dp, < 60 s",
           [&] { return grid(true, 3, 12, 2000, fib_div); });
  gate.run(5, "lucas grid i in [2,10], n in [0,2000]: closed == general == dp",
           [&] { return grid(false, 2, 10, 2000, lucas_div); });
  gate.run(6, "count2 == enumeration and window periodicity, coprime a < b <= 50, n <= 2000",
           count2_grid);
  gate.run(7, "reciprocity lhs == rhs on 1000 random triples with a <= 10^6", reciprocity_sweep);
  gate.run(8, "floor_sum_fast == floor_sum_direct on 10000 random inputs <= 10^6",
           floor_sum_sweep);
  gate.run(9, "2abc divides N1/N2/N3 everywhere on the criterion 4-5 grids",
           [&] { return divisibility(fib_div, lucas_div); });
  gate.run(10, "c'1 == 1, a'2 == 1, b'3 == c-1 for fib i <= 40 and lucas i <= 40",
           derived_residues);
  gate.run(11, "fib 40 10^18 --method formula: exact result in < 100 ms", scale_demo);

  if (gate.failures > 0) {
    std::printf("%d criterion(s) failed\n", gate.failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
