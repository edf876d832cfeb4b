// wirtwidth: Wirtinger width of knot diagrams from Gauss codes.
//
// exit codes: 0 ok, 1 usage or bad input, 2 I/O, 3 verification failure

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wirtwidth/census.hpp"
#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"
#include "wirtwidth/lift.hpp"
#include "wirtwidth/oracle.hpp"
#include "wirtwidth/search.hpp"

using namespace wirtwidth;

namespace {

constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kVerify = 3;

int cmd_compute(const std::string& gauss, bool exact, bool heuristic, int seeds, std::uint64_t budget,
                bool budget_set, bool emit_witness, bool emit_profile) {
  const Diagram d = build_diagram(parse_gauss(gauss));
  const bool use_exact = exact || (!heuristic && d.n_crossings() <= CensusOptions{}.auto_threshold);
  const WidthReport r = use_exact ? exact_width(d, budget_set ? budget : kDefaultExactBudget)
                                  : lazy_seed_heuristic(d, seeds, budget_set ? budget : kDefaultHeuristicBudget);
  std::cout << "gauss        " << serialize_gauss(d.code()) << '\n'
            << "crossings    " << d.n_crossings() << '\n'
            << "strands      " << d.n_strands() << '\n'
            << "mu           " << r.mu_upper << (r.mu_exact ? "" : " (upper bound)") << '\n'
            << "width        " << r.width_upper << (r.width_exact ? "" : " (upper bound)") << '\n'
            << "seeds_used   " << r.seeds_used() << '\n'
            << "nodes        " << r.nodes_explored << (r.budget_exhausted ? " (budget exhausted)" : "") << '\n'
            << "ms           " << r.elapsed.count() / 1000.0 << '\n';
  if (emit_witness) {
    std::cout << "# witness\n" << to_text(r.witness);
    std::cout << "# attached";
    for (int v : attached_sequence(d, r.witness).values) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (emit_profile) {
    const MorseProfile p = build_profile(d, r.witness);
    std::cout << "# profile (sweep width " << sweep_width(p) << ")\n"
              << profile_text(p) << "# polyline\n"
              << polyline_text(lifted_walk(d, r.witness));
  }
  return 0;
}

int cmd_census(const std::string& input, const std::string& output, CensusOptions opt) {
  const CensusSummary s = run_census(input, output, opt);
  std::cout << "rows " << s.rows << "  exact " << s.exact << "  heuristic " << s.heuristic_only << "  errors "
            << s.errors << '\n';
  for (auto [w, c] : s.by_width) std::cout << "width " << w << ": " << c << '\n';
  if (!s.stuck_at_32.empty()) {
    std::cout << "heuristic stuck at 32:";
    for (const auto& n : s.stuck_at_32) std::cout << ' ' << n;
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& input) {
  const auto verdicts = verify_certificates(input);
  int failed = 0;
  for (const auto& v : verdicts) {
    if (v.pass) continue;
    ++failed;
    std::cout << "FAIL line " << v.line << " " << v.name << ": " << v.reason << '\n';
  }
  std::cout << verdicts.size() - failed << "/" << verdicts.size() << " certificates verified\n";
  return failed ? kVerify : 0;
}

int cmd_oracle(const std::string& gauss, int guard, bool dedup) {
  const Diagram d = build_diagram(parse_gauss(gauss));
  OracleOptions opt;
  opt.deduplicate = dedup;
  const OracleResult r = oracle_min_width(d, guard, opt);
  std::cout << "min_width              " << r.min_width << '\n'
            << "min_seed_count         " << r.min_seed_count << '\n'
            << "count_of_optimal_logs  " << r.count_of_optimal_logs << '\n'
            << "logs_enumerated        " << r.logs_enumerated << '\n'
            << "violations             " << r.violations << '\n';
  if (r.violations) {
    std::cout << "# first violation\n" << r.first_violation;
    return kVerify;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wirtinger width of knot diagrams"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "width and Wirtinger number of one diagram");
  std::string gauss;
  bool exact = false, heuristic = false, emit_witness = false, emit_profile = false;
  int seeds = 0;
  std::uint64_t budget = 0;
  compute->add_option("--gauss,-g", gauss, "Gauss code, e.g. \"-1,2,-3,1,-2,3\"")->required();
  auto* ex = compute->add_flag("--exact", exact, "branch-and-bound search");
  auto* he = compute->add_flag("--heuristic", heuristic, "seed-then-saturate search");
  ex->excludes(he);
  compute->add_option("--seeds", seeds, "heuristic seed target (default: Wirtinger number)");
  auto* budget_opt = compute->add_option("--budget", budget, "node budget");
  compute->add_flag("--emit-witness", emit_witness, "print the witness log and attached sequence");
  compute->add_flag("--emit-profile", emit_profile, "print the lifted height profile");

  auto* census = app.add_subcommand("census", "batch run over a name<TAB>code file");
  std::string input, output, strategy = "auto", json;
  CensusOptions copt;
  bool no_timing = false;
  census->add_option("--input,-i", input, "input file")->required();
  census->add_option("--output,-o", output, "CSV results file")->required();
  census->add_option("--workers,-w", copt.workers, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--strategy", strategy, "exact | heuristic | auto")
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  census->add_option("--threshold", copt.auto_threshold, "auto: exact up to this many crossings");
  census->add_option("--budget", copt.exact_budget, "exact node budget");
  census->add_option("--heuristic-budget", copt.heuristic_budget, "heuristic node budget");
  census->add_option("--seeds", copt.seeds, "heuristic seed target (default: Wirtinger number)");
  census->add_option("--json", json, "also write a JSON mirror here");
  census->add_flag("--no-timing", no_timing, "write ms=0 for byte-stable output");

  auto* verify = app.add_subcommand("verify", "re-check the witnesses in a results file");
  std::string results;
  verify->add_option("--input,-i", results, "CSV results file")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration (small diagrams only)");
  int guard = kDefaultOracleGuard;
  bool dedup = false;
  oracle->add_option("--gauss,-g", gauss, "Gauss code")->required();
  oracle->add_option("--guard", guard, "maximum crossing count");
  oracle->add_flag("--dedup", dedup, "skip repeated (coloring, total) states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kUsage;
  }

  try {
    if (*compute)
      return cmd_compute(gauss, exact, heuristic, seeds, budget, budget_opt->count() > 0, emit_witness, emit_profile);
    if (*census) {
      copt.strategy = parse_strategy(strategy);
      copt.timing = !no_timing;
      if (!json.empty()) copt.json_path = json;
      return cmd_census(input, output, copt);
    }
    if (*verify) return cmd_verify(results);
    if (*oracle) return cmd_oracle(gauss, guard, dedup);
  } catch (const CensusIoError& e) {
    std::cerr << "wirtwidth: " << e.what() << '\n';
    return kIo;
  } catch (const GaussError& e) {
    std::cerr << "wirtwidth: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleError& e) {
    std::cerr << "wirtwidth: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "wirtwidth: " << e.what() << '\n';
    return kVerify;
  }
  return kUsage;
}
