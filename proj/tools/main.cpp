#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "denum/cli.hpp"
#include "denum/oracle.hpp"

namespace {

using denum::Int;
namespace cli = denum::cli;

cli::Method method_from(const std::string& name) {
  if (name == "formula") return cli::Method::formula;
  if (name == "direct-sums") return cli::Method::direct_sums;
  if (name == "oracle") return cli::Method::oracle;
  return cli::Method::auto_select;
}

cli::Family family_from(const std::string& name) {
  if (name == "lucas") return cli::Family::lucas;
  if (name == "generic") return cli::Family::generic;
  return cli::Family::fib;
}

struct GlobalOpts {
  std::string method = "auto";
  bool json = false;
  bool show_quantities = false;
  std::uint64_t oracle_budget = 0;  // 0 keeps the per-engine defaults
  std::uint64_t seed = 12345;
};

cli::QuerySpec base_spec(const GlobalOpts& g) {
  cli::QuerySpec spec;
  spec.method = method_from(g.method);
  spec.show_quantities = g.show_quantities;
  if (g.oracle_budget != 0) {
    spec.brute_budget = g.oracle_budget;
    spec.dp_budget = g.oracle_budget;
  }
  return spec;
}

denum::SeqIndex to_index(const std::string& text) {
  const Int i = cli::parse_int(text);
  if (!i.fits_slong_p()) {
    throw std::invalid_argument("sequence index out of range: " + text);
  }
  return i.get_si();
}

void print_query(const cli::QuerySpec& spec, const cli::CountResult& result, bool json) {
  if (json) {
    std::cout << cli::to_json_line(spec, result) << "\n";
  } else {
    std::cout << cli::to_text(spec, result);
  }
}

int run_listing(const cli::QuerySpec& spec, bool json) {
  const denum::BruteListing listing =
      denum::brute_enumerate(spec.coeffs, spec.n, 10'000, denum::BruteOptions{spec.brute_budget});
  if (json) {
    nlohmann::ordered_json j;
    j["kind"] = "oracle";
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Int& c : spec.coeffs) {
      coeffs.push_back(c.get_str());
    }
    j["inputs"] = {{"coeffs", coeffs}, {"n", spec.n.get_str()}};
    j["count"] = listing.total.get_str();
    j["method_used"] = "oracle-brute";
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (const auto& tuple : listing.tuples) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const Int& x : tuple) {
        row.push_back(x.get_str());
      }
      tuples.push_back(row);
    }
    j["tuples"] = tuples;
    j["truncated"] = listing.truncated;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& tuple : listing.tuples) {
      std::string line;
      for (const Int& x : tuple) {
        line += (line.empty() ? "" : " ") + x.get_str();
      }
      std::cout << line << "\n";
    }
    std::cout << "count = " << listing.total.get_str() << "\n";
    if (listing.truncated) {
      std::cout << "truncated = true\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of non-negative integer solutions of a*x+b*y=n and a*x+b*y+c*z=n,\n"
               "with O(1) closed forms for consecutive Fibonacci and Lucas coefficient triples."};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--method", global.method, "counting method (default: auto)")
      ->check(CLI::IsMember({"auto", "formula", "direct-sums", "oracle"}));
  app.add_flag("--json", global.json, "emit compact JSON instead of text");
  app.add_flag("--show-quantities", global.show_quantities,
               "include the formula residues in the output");
  app.add_option("--oracle-budget", global.oracle_budget,
                 "oracle work ceiling: brute-force iterations / dp table entries "
                 "(defaults 1e8 / 1e7)");
  app.add_option("--seed", global.seed, "seed for the randomized verification sweeps");

  std::string arg_a, arg_b, arg_c, arg_n, arg_i;
  std::vector<std::string> arg_oracle;
  std::string arg_batch;
  bool arg_brute = false;
  bool arg_list = false;

  auto* c2 = app.add_subcommand("count2", "count solutions of a*x + b*y = n");
  c2->add_option("a", arg_a, "first coefficient")->required();
  c2->add_option("b", arg_b, "second coefficient")->required();
  c2->add_option("n", arg_n, "target value")->required();

  auto* c3 = app.add_subcommand("count3", "count solutions of a*x + b*y + c*z = n");
  c3->add_option("a", arg_a, "first coefficient")->required();
  c3->add_option("b", arg_b, "second coefficient")->required();
  c3->add_option("c", arg_c, "third coefficient")->required();
  c3->add_option("n", arg_n, "target value")->required();

  auto* fb = app.add_subcommand("fib", "count solutions of F_i*x + F_{i+1}*y + F_{i+2}*z = n");
  fb->add_option("i", arg_i, "Fibonacci index (closed form needs i >= 3; exact at any index)")
      ->required();
  fb->add_option("n", arg_n, "target value")->required();

  auto* lc = app.add_subcommand("lucas", "count solutions of L_i*x + L_{i+1}*y + L_{i+2}*z = n");
  lc->add_option("i", arg_i, "Lucas index (closed form needs i >= 2; exact at any index)")
      ->required();
  lc->add_option("n", arg_n, "target value")->required();

  auto* orc = app.add_subcommand("oracle", "count by dynamic programming or enumeration, "
                                           "any positive coefficients");
  orc->add_option("args", arg_oracle, "coefficients followed by the target value")
      ->required()
      ->expected(-2);
  orc->add_flag("--brute", arg_brute, "use nested enumeration instead of dp");
  orc->add_flag("--list", arg_list, "enumerate the solutions themselves (first 10000)");

  std::string arg_family = "all";
  std::int64_t arg_i_min = -1, arg_i_max = -1, arg_n_max = -1, arg_max_coeff = 12;
  std::uint64_t arg_samples = 1000;
  auto* ver = app.add_subcommand("verify", "compare closed forms, general formula and oracle "
                                           "over a grid; exit 0 iff no mismatches");
  ver->add_option("--family", arg_family, "fib|lucas|generic|all (default: all)")
      ->check(CLI::IsMember({"fib", "lucas", "generic", "all"}));
  ver->add_option("--i-min", arg_i_min, "smallest sequence index (default: family minimum)");
  ver->add_option("--i-max", arg_i_max, "largest sequence index (default: 8)");
  ver->add_option("--n-max", arg_n_max, "largest target value (defaults: 300 / 300 / 200)");
  ver->add_option("--max-coeff", arg_max_coeff, "largest generic coefficient (default: 12)");
  ver->add_option("--samples", arg_samples,
                  "sample count for the floor-sum and reciprocity sweeps (default: 1000)");

  int arg_reps = 5;
  auto* ben = app.add_subcommand("bench", "time the formulas against the oracles (CSV, "
                                          "or JSON with --json)");
  ben->add_option("--reps", arg_reps, "repetitions per measurement (default: 5)")
      ->check(CLI::PositiveNumber);

  auto* bat = app.add_subcommand("batch", "run one query per line from a file, or '-' "
                                          "for standard input");
  bat->add_option("file", arg_batch, "query file, '-' for stdin")->required();

  for (auto* sub : {c2, c3, fb, lc, orc, ver, ben, bat}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  }

  try {
    cli::QuerySpec spec = base_spec(global);

    if (c2->parsed() || c3->parsed()) {
      spec.kind = c2->parsed() ? cli::QueryKind::count2 : cli::QueryKind::count3;
      spec.coeffs.push_back(cli::parse_int(arg_a));
      spec.coeffs.push_back(cli::parse_int(arg_b));
      if (c3->parsed()) {
        spec.coeffs.push_back(cli::parse_int(arg_c));
      }
      spec.n = cli::parse_int(arg_n);
      print_query(spec, cli::run_query(spec), global.json);
      return 0;
    }

    if (fb->parsed() || lc->parsed()) {
      spec.kind = fb->parsed() ? cli::QueryKind::fib : cli::QueryKind::lucas;
      spec.index = to_index(arg_i);
      spec.n = cli::parse_int(arg_n);
      print_query(spec, cli::run_query(spec), global.json);
      return 0;
    }

    if (orc->parsed()) {
      spec.kind = cli::QueryKind::oracle;
      spec.prefer_brute = arg_brute || arg_list;
      for (std::size_t k = 0; k + 1 < arg_oracle.size(); ++k) {
        spec.coeffs.push_back(cli::parse_int(arg_oracle[k]));
      }
      spec.n = cli::parse_int(arg_oracle.back());
      if (arg_list) {
        return run_listing(spec, global.json);
      }
      print_query(spec, cli::run_query(spec), global.json);
      return 0;
    }

    if (ver->parsed()) {
      std::vector<cli::Family> families;
      if (arg_family == "all") {
        families = {cli::Family::fib, cli::Family::lucas, cli::Family::generic};
      } else {
        families = {family_from(arg_family)};
      }
      std::uint64_t mismatches = 0;
      for (const cli::Family family : families) {
        cli::VerifyGrid grid;
        grid.family = family;
        grid.i_min = arg_i_min >= 0 ? arg_i_min : (family == cli::Family::lucas ? 2 : 3);
        grid.i_max = arg_i_max >= 0 ? arg_i_max : 8;
        grid.n_max = arg_n_max >= 0 ? arg_n_max
                                    : (family == cli::Family::generic ? 200 : 300);
        grid.max_coeff = arg_max_coeff;
        grid.samples = arg_samples;
        grid.seed = global.seed;
        const cli::VerifyReport report = cli::run_verify(grid);
        std::cout << cli::verify_text(grid, report);
        mismatches += report.mismatches;
      }
      if (mismatches > 0) {
        std::cerr << "error: verify: " << mismatches << " mismatches\n";
        return 1;
      }
      return 0;
    }

    if (ben->parsed()) {
      cli::BenchOptions opts;
      opts.reps = arg_reps;
      if (global.oracle_budget != 0) {
        opts.brute_budget = global.oracle_budget;
        opts.dp_budget = global.oracle_budget;
      }
      const std::vector<cli::BenchRow> rows = cli::run_bench(opts);
      std::cout << (global.json ? cli::bench_json(rows) + "\n" : cli::bench_csv(rows));
      return 0;
    }

    // batch
    cli::BatchOutcome outcome;
    if (arg_batch == "-") {
      outcome = cli::run_batch(std::cin, spec, global.json);
    } else {
      std::ifstream file(arg_batch);
      if (!file) {
        std::cerr << "error: invalid-argument: cannot open batch file '" << arg_batch << "'\n";
        return 2;
      }
      outcome = cli::run_batch(file, spec, global.json);
    }
    for (const std::string& line : outcome.lines) {
      std::cout << line << "\n";
    }
    if (outcome.failures > 0) {
      std::cerr << "error: batch: " << outcome.failures << " queries failed\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << cli::error_category(e) << ": " << e.what() << "\n";
    return cli::exit_code_for(e);
  }
}
