// Command-line front end: crisp solve, fuzzy solve, simplification report,
// heuristic baselines, suite reproduction, and instance generation.
//
// Exit codes: 0 success, 1 input error (bad flags, missing or malformed
// files, parameter ranges), 2 computation failure (solver errors, failed
// reproduction checks).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frifc/appendix.hpp"
#include "frifc/bench.hpp"
#include "frifc/fri.hpp"
#include "frifc/heuristics.hpp"
#include "frifc/linearize.hpp"
#include "frifc/problem.hpp"
#include "frifc/simplify.hpp"

namespace {

using namespace frifc;

// Anything thrown before computation starts maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FriProblem load_problem(const std::string& path) {
  try {
    return parse_problem_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

FuzzyParams make_params(const FriProblem& p, double d, const std::vector<double>& d_list,
                        double d0, double v) {
  FuzzyParams fp = FuzzyParams::uniform(p.m, d, d0, v);
  if (!d_list.empty()) fp.d = d_list;
  try {
    validate(p, fp);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return fp;
}

std::string fmt4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string vec4(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt4(v[i]);
  }
  return s + ")";
}

void print_header(const FriProblem& p) {
  std::cout << "problem " << p.id << " (" << p.m << "x" << p.n << ")\n";
}

int do_crisp(const std::string& file) {
  const FriProblem p = load_problem(file);
  const CrispSolution cs = crisp_optimum(p);
  print_header(p);
  std::cout << "x_bar  = " << vec4(cs.x_bar) << "\n"
            << "x_star = " << vec4(cs.x_star) << "\n"
            << "z_star = " << fmt4(cs.z_star) << "\n";
  return 0;
}

int do_solve(const std::string& file, double d, const std::vector<double>& d_list, double d0,
             double v, bool no_simplify) {
  const FriProblem p = load_problem(file);
  const FuzzyParams fp = make_params(p, d, d_list, d0, v);
  SimplifyToggles toggles;
  if (no_simplify) toggles = {false, false, false};
  const SolveReport r = solve_fri_fc(p, fp, toggles);
  print_header(p);
  std::cout << "z_star      = " << fmt4(r.crisp.z_star) << "\n"
            << "target      = [" << fmt4(r.interval_lo) << ", " << fmt4(r.interval_hi)
            << "]\n"
            << "lambda_star = " << fmt4(r.lambda_star) << "\n"
            << "x_star_star = " << vec4(r.x_star_star) << "\n"
            << "objective   = " << fmt4(r.obj_value) << "\n"
            << "mu_F = " << fmt4(r.report.mu_F) << "  mu_0 = " << fmt4(r.report.mu_0)
            << "  mu_T = " << fmt4(r.report.mu_T) << "\n"
            << "ccv         = " << vec4(r.report.ccv) << "\n";
  return 0;
}

int do_simplify(const std::string& file) {
  const FriProblem p = load_problem(file);
  const SimplifiedProblem sp = simplify_problem(p);
  print_header(p);
  if (sp.fixed.empty()) {
    std::cout << "fixed: none\n";
  } else {
    std::cout << "fixed:";
    for (const auto& [j, val] : sp.fixed) std::cout << " x" << (j + 1) << "=" << fmt4(val);
    std::cout << "\n";
  }
  std::cout << "free columns:";
  for (int j : sp.J_prime) std::cout << " " << (j + 1);
  std::cout << "\n";
  for (int i = 0; i < p.m; ++i) {
    std::cout << "row " << (i + 1) << " active:";
    for (int j : sp.J_prime_i[i]) std::cout << " " << (j + 1);
    std::cout << "\n";
  }
  std::cout << "reduced matrix:\n";
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j)
      std::cout << (j ? " " : "  ") << fmt4(sp.A_prime[i * p.n + j]);
    std::cout << "\n";
  }
  return 0;
}

void write_trace(const std::filesystem::path& path, const RunTrace& tr) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << "iter,best_mu_T\n";
  for (std::size_t i = 0; i < tr.best_so_far.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", tr.best_so_far[i]);
    f << (i + 1) << ',' << buf << '\n';
  }
}

int do_heuristic(const std::string& file, const std::string& algo, int runs, int iters,
                 std::uint64_t seed, const std::string& trace_dir, double d,
                 const std::vector<double>& d_list, double d0, double v) {
  if (runs < 1 || iters < 1) throw InputError("--runs and --iters must be at least 1");
  const FriProblem p = load_problem(file);
  const FuzzyParams fp = make_params(p, d, d_list, d0, v);
  auto configs = default_configs();
  if (!configs.count(algo)) throw InputError("unknown algorithm '" + algo + "'");

  const CrispSolution cs = crisp_optimum(p);
  const double z0 = cs.z_star - fp.v * fp.d0;
  HeuristicConfig cfg = configs[algo];
  cfg.iterations = iters;

  if (!trace_dir.empty()) std::filesystem::create_directories(trace_dir);
  std::vector<RunTrace> traces;
  traces.reserve(runs);
  std::size_t best = 0;
  double err_sum = 0.0;
  for (int rep = 0; rep < runs; ++rep) {
    cfg.seed = derive_seed(seed, 0, 0, rep);
    traces.push_back(run_heuristic(p, fp, z0, cfg));
    err_sum += error_metric(p, fp, z0, traces.back().final_x);
    if (traces.back().final_mu_T > traces[best].final_mu_T) best = rep;
    if (!trace_dir.empty())
      write_trace(std::filesystem::path(trace_dir) /
                      ("trace_" + p.id + "_" + algo + "_" + std::to_string(rep) + ".csv"),
                  traces.back());
  }
  const RunStats st = summarize_runs(traces);
  print_header(p);
  std::cout << "algo " << algo << ", " << runs << " runs x " << iters << " iters, seed "
            << seed << "\n"
            << "target      = [" << fmt4(z0) << ", " << fmt4(z0 + fp.d0) << "]\n"
            << "best mu_T   = " << fmt4(traces[best].final_mu_T) << " (run " << best << ")\n"
            << "best x      = " << vec4(traces[best].final_x) << "\n"
            << "avg = " << fmt4(st.avg) << "  mdn = " << fmt4(st.mdn)
            << "  sd = " << fmt4(st.sd) << "\n"
            << "avg error   = " << fmt4(err_sum / runs) << "\n";
  if (!trace_dir.empty()) std::cout << "traces written to " << trace_dir << "\n";
  return 0;
}

int do_reproduce(const std::string& suite, const std::string& out, const std::string& format,
                 int runs, int iters, std::uint64_t seed) {
  if (suite != "appendix-a") throw InputError("unknown suite '" + suite + "'");
  if (runs < 1 || iters < 1) throw InputError("--runs and --iters must be at least 1");
  const char sep = format == "tsv" ? '\t' : ',';

  const auto& suite_entries = appendix_suite();
  std::vector<FriProblem> problems;
  for (const auto& e : suite_entries) problems.push_back(e.problem);
  FuzzyParams fp;
  fp.d = {0.1};
  fp.d0 = 0.1;
  fp.v = 0.5;

  const std::vector<std::string> algos = {"pso", "acor", "de", "hs"};
  const BenchSummary sm = run_suite(problems, fp, algos, runs, iters, seed);
  write_tables(sm, out, sep);

  // Published-value check on the deterministic column, 4-decimal tolerance.
  constexpr double tol = 5e-4;
  int failures = 0;
  for (std::size_t i = 0; i < suite_entries.size(); ++i) {
    const auto& ref = suite_entries[i].ref;
    const auto& ex = sm.problems[i].exact;
    const struct {
      const char* name;
      double got, want;
    } checks[] = {
        {"mu_T", ex.report.mu_T, ref.mu_T},
        {"objective", ex.obj_value, ref.obj_super},
        {"z_star", ex.crisp.z_star, ref.obj_crisp},
        {"z0", ex.interval_lo, ref.z0},
        {"z0+d0", ex.interval_hi, ref.z0_plus_d0},
    };
    bool ok = true;
    for (const auto& c : checks) {
      if (std::abs(c.got - c.want) > tol) {
        std::cout << sm.problems[i].id << ": " << c.name << " = " << fmt4(c.got)
                  << ", published " << fmt4(c.want) << " MISMATCH\n";
        ok = false;
        ++failures;
      }
    }
    if (ok)
      std::cout << sm.problems[i].id << ": ok  (mu_T " << fmt4(ex.report.mu_T)
                << ", objective " << fmt4(ex.obj_value) << ")\n";
  }
  std::cout << "tables written to " << out << "\n";
  if (failures) {
    std::cout << failures << " published-value check(s) failed\n";
    return 2;
  }
  std::cout << "all published-value checks passed\n";
  return 0;
}

int do_gen(int m, int n, std::uint64_t seed, const std::string& out) {
  if (m < 1 || n < 1) throw InputError("--m and --n must be at least 1");
  const std::string text = write_problem(gen_random(m, n, seed));
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear optimization over max-product fuzzy relational inequalities"};
  app.require_subcommand(1);

  std::string file, algo, trace_dir, suite = "appendix-a", out = ".", format = "csv";
  std::string gen_out;
  double d = 0.1, d0 = 0.1, v = 0.5;
  std::vector<double> d_list;
  int runs = 30, iters = 100, m = 0, n = 0;
  std::uint64_t seed = 1;
  bool no_simplify = false;

  auto* c_crisp = app.add_subcommand("crisp", "crisp optimum over the feasible box");
  c_crisp->add_option("file", file, "problem file")->required();

  auto* c_solve = app.add_subcommand("solve", "exact super-optimum via the level model");
  c_solve->add_option("file", file, "problem file")->required();
  auto* opt_d = c_solve->add_option("--d", d, "constraint tolerance, broadcast to all rows");
  c_solve->add_option("--d-list", d_list, "per-row tolerances, comma separated")
      ->delimiter(',')
      ->excludes(opt_d);
  c_solve->add_option("--d0", d0, "objective tolerance");
  c_solve->add_option("--v", v, "target depth factor");
  c_solve->add_flag("--no-simplify", no_simplify, "skip all reduction rules");

  auto* c_simpl = app.add_subcommand("simplify", "report the reduced problem");
  c_simpl->add_option("file", file, "problem file")->required();

  auto* c_heur = app.add_subcommand("heuristic", "run a stochastic baseline");
  c_heur->add_option("file", file, "problem file")->required();
  c_heur->add_option("--algo", algo, "pso, acor, de, or hs")->required();
  c_heur->add_option("--runs", runs, "independent runs");
  c_heur->add_option("--iters", iters, "iterations per run");
  c_heur->add_option("--seed", seed, "master seed; per-run seeds are derived");
  c_heur->add_option("--trace-out", trace_dir, "write per-run convergence traces here");
  auto* opt_dh = c_heur->add_option("--d", d, "constraint tolerance, broadcast to all rows");
  c_heur->add_option("--d-list", d_list, "per-row tolerances, comma separated")
      ->delimiter(',')
      ->excludes(opt_dh);
  c_heur->add_option("--d0", d0, "objective tolerance");
  c_heur->add_option("--v", v, "target depth factor");

  auto* c_repro = app.add_subcommand("reproduce", "rerun a suite and check published values");
  c_repro->add_option("--suite", suite, "suite name (appendix-a)");
  c_repro->add_option("--out", out, "output directory for tables and traces");
  c_repro->add_option("--format", format, "csv or tsv")
      ->check(CLI::IsMember({"csv", "tsv"}));
  c_repro->add_option("--runs", runs, "runs per heuristic cell");
  c_repro->add_option("--iters", iters, "iterations per run");
  c_repro->add_option("--seed", seed, "master seed");

  auto* c_gen = app.add_subcommand("gen", "generate a random instance");
  c_gen->add_option("--m", m, "constraint count")->required();
  c_gen->add_option("--n", n, "variable count")->required();
  c_gen->add_option("--seed", seed, "generator seed");
  c_gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c_crisp) return do_crisp(file);
    if (*c_solve) return do_solve(file, d, d_list, d0, v, no_simplify);
    if (*c_simpl) return do_simplify(file);
    if (*c_heur) return do_heuristic(file, algo, runs, iters, seed, trace_dir, d, d_list, d0, v);
    if (*c_repro) return do_reproduce(suite, out, format, runs, iters, seed);
    if (*c_gen) return do_gen(m, n, seed, gen_out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
