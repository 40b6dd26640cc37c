#include "frifc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "frifc/fri.hpp"
#include "frifc/rng.hpp"

namespace frifc {

double error_metric(const FriProblem& p, const FuzzyParams& fp, double z0,
                    const std::vector<double>& x) {
  const auto [ccv, fcv] = violation_vectors(p, fp, x);
  double sum = 0.0;
  for (double v : ccv) sum += v;
  double obj = 0.0;
  for (int j = 0; j < p.n; ++j) obj += p.c[j] * x[j];
  return 0.5 * (sum / p.m + std::abs(z0 - obj));
}

RunStats summarize_runs(const std::vector<RunTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("no runs to summarize");
  const std::size_t n = traces.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = traces[i].final_mu_T;

  RunStats s;
  for (double v : f) s.avg += v;
  s.avg /= static_cast<double>(n);
  std::sort(f.begin(), f.end());
  s.mdn = n % 2 ? f[n / 2] : 0.5 * (f[n / 2 - 1] + f[n / 2]);
  if (n > 1) {
    double ss = 0.0;
    for (double v : f) ss += (v - s.avg) * (v - s.avg);
    s.sd = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

namespace {

// Continued fraction for the regularized incomplete beta, modified Lentz.
double betacf(double a, double b, double x) {
  constexpr double eps = 1e-14, fpmin = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

double ibeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

// Two-sided tail probability of Student's t.
double t_two_sided_p(double t, int df) {
  const double v = static_cast<double>(df);
  return ibeta(0.5 * v, 0.5, v / (v + t * t));
}

// Upper quantile via bisection on the monotone tail.
double t_upper_quantile(double two_sided_tail, int df) {
  double lo = 0.0, hi = 1.0;
  while (t_two_sided_p(hi, df) > two_sided_tail) hi *= 2.0;  // bracket
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (t_two_sided_p(mid, df) > two_sided_tail ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TTestResult paired_t_test(const std::vector<double>& diffs) {
  const std::size_t n = diffs.size();
  if (n < 2) throw std::invalid_argument("paired t-test needs at least two observations");
  TTestResult r;
  for (double d : diffs) r.mean += d;
  r.mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double d : diffs) ss += (d - r.mean) * (d - r.mean);
  r.sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (r.sd == 0.0) throw std::invalid_argument("degenerate variance: all differences equal");
  r.sem = r.sd / std::sqrt(static_cast<double>(n));
  r.t = r.mean / r.sem;
  r.df = static_cast<int>(n) - 1;
  r.p = t_two_sided_p(std::abs(r.t), r.df);
  const double tcrit = t_upper_quantile(0.05, r.df);
  r.ci_lo = r.mean - tcrit * r.sem;
  r.ci_hi = r.mean + tcrit * r.sem;
  return r;
}

std::uint64_t derive_seed(std::uint64_t master_seed, int problem_index, int algo_index,
                          int rep) {
  std::uint64_t s = SplitMix64::mix(master_seed ^ 0x6269736563740A5Bull);
  s = SplitMix64::mix(s + static_cast<std::uint64_t>(problem_index) + 1);
  s = SplitMix64::mix(s + static_cast<std::uint64_t>(algo_index) + 1);
  return SplitMix64::mix(s + static_cast<std::uint64_t>(rep) + 1);
}

namespace {

FuzzyParams fit_params(const FuzzyParams& fp, int m) {
  if (fp.d.size() == static_cast<std::size_t>(m)) return fp;
  if (fp.d.size() == 1) return FuzzyParams::uniform(m, fp.d[0], fp.d0, fp.v);
  throw std::invalid_argument("tolerance vector matches neither the problem nor a scalar");
}

}  // namespace

BenchSummary run_suite(const std::vector<FriProblem>& problems, const FuzzyParams& fp,
                       const std::vector<std::string>& algorithms, int repetitions,
                       int iterations, std::uint64_t master_seed) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  auto defaults = default_configs();
  for (const auto& algo : algorithms)
    if (!defaults.count(algo)) throw std::invalid_argument("unknown algorithm '" + algo + "'");

  BenchSummary out;
  out.algos = algorithms;
  out.cells.resize(problems.size());

  for (std::size_t pi = 0; pi < problems.size(); ++pi) {
    const FriProblem& p = problems[pi];
    try {
      const FuzzyParams fpp = fit_params(fp, p.m);
      ProblemRow row;
      row.id = p.id;
      row.exact = solve_fri_fc(p, fpp);
      out.cells[pi].resize(algorithms.size());
      for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
        HeuristicConfig cfg = defaults[algorithms[ai]];
        cfg.iterations = iterations;
        AlgoCell& cell = out.cells[pi][ai];
        cell.runs.reserve(repetitions);
        double err_sum = 0.0, sec_sum = 0.0;
        for (int rep = 0; rep < repetitions; ++rep) {
          cfg.seed = derive_seed(master_seed, static_cast<int>(pi), static_cast<int>(ai), rep);
          RunTrace tr = run_heuristic(p, fpp, row.exact.z0, cfg);
          err_sum += error_metric(p, fpp, row.exact.z0, tr.final_x);
          sec_sum += tr.wall_seconds;
          cell.runs.push_back(std::move(tr));
        }
        cell.stats = summarize_runs(cell.runs);
        cell.avg_error = err_sum / repetitions;
        cell.avg_seconds = sec_sum / repetitions;
      }
      out.problems.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw std::runtime_error(p.id + ": " + e.what());
    }
  }

  // Squared-error summary row and the per-algorithm paired test on
  // per-problem differences (exact best level minus the algorithm's mean).
  const auto nprob = static_cast<double>(problems.size());
  for (std::size_t pi = 0; pi < problems.size(); ++pi) {
    const double e = out.problems[pi].exact.error;
    out.exact_mse += e * e / nprob;
  }
  for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
    double mse = 0.0;
    std::vector<double> diffs(problems.size());
    for (std::size_t pi = 0; pi < problems.size(); ++pi) {
      const AlgoCell& cell = out.cells[pi][ai];
      mse += cell.avg_error * cell.avg_error / nprob;
      diffs[pi] = out.problems[pi].exact.report.mu_T - cell.stats.avg;
    }
    out.algo_mse[algorithms[ai]] = mse;
    const bool degenerate =
        diffs.size() < 2 ||
        std::all_of(diffs.begin(), diffs.end(), [&](double d) { return d == diffs[0]; });
    if (!degenerate) out.ttest[algorithms[ai]] = paired_t_test(diffs);
  }
  return out;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string joined(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += num(v[i]);
  }
  return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  return f;
}

}  // namespace

void write_tables(const BenchSummary& sm, const std::string& dir, char sep) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path base = dir;

  {
    auto f = open_out(base / "table1.csv");
    f << "id" << sep << "muF" << sep << "mu0" << sep << "muT" << sep << "obj_ss" << sep
      << "obj_s" << sep << "z0" << sep << "z0+d0\n";
    for (const auto& row : sm.problems) {
      const auto& e = row.exact;
      f << row.id << sep << num(e.report.mu_F) << sep << num(e.report.mu_0) << sep
        << num(e.report.mu_T) << sep << num(e.obj_value) << sep << num(e.crisp.z_star) << sep
        << num(e.interval_lo) << sep << num(e.interval_hi) << '\n';
    }
  }
  {
    auto f = open_out(base / "table2.csv");
    f << "id" << sep << "x_star" << sep << "x_star_star" << sep << "ccv\n";
    for (const auto& row : sm.problems)
      f << row.id << sep << joined(row.exact.crisp.x_star) << sep
        << joined(row.exact.x_star_star) << sep << joined(row.exact.report.ccv) << '\n';
  }
  {
    auto f = open_out(base / "table5.csv");
    f << "id" << sep << "exact";
    for (const auto& a : sm.algos) f << sep << a;
    f << '\n';
    for (std::size_t pi = 0; pi < sm.problems.size(); ++pi) {
      f << sm.problems[pi].id << sep << num(sm.problems[pi].exact.error);
      for (std::size_t ai = 0; ai < sm.algos.size(); ++ai)
        f << sep << num(sm.cells[pi][ai].avg_error);
      f << '\n';
    }
    f << "MSE" << sep << num(sm.exact_mse);
    for (const auto& a : sm.algos) f << sep << num(sm.algo_mse.at(a));
    f << '\n';
  }
  {
    auto f = open_out(base / "table6.csv");
    f << "id" << sep << "exact_seconds";
    for (const auto& a : sm.algos) f << sep << a << "_seconds";
    f << '\n';
    for (std::size_t pi = 0; pi < sm.problems.size(); ++pi) {
      f << sm.problems[pi].id << sep << num(sm.problems[pi].exact.runtime_seconds);
      for (std::size_t ai = 0; ai < sm.algos.size(); ++ai)
        f << sep << num(sm.cells[pi][ai].avg_seconds);
      f << '\n';
    }
  }
  {
    auto f = open_out(base / "table7.csv");
    f << "id";
    for (const auto& a : sm.algos) f << sep << a;
    f << '\n';
    for (std::size_t pi = 0; pi < sm.problems.size(); ++pi) {
      f << sm.problems[pi].id;
      for (std::size_t ai = 0; ai < sm.algos.size(); ++ai)
        f << sep
          << num(sm.problems[pi].exact.report.mu_T - sm.cells[pi][ai].stats.avg);
      f << '\n';
    }
    const char* stats[] = {"mean", "sd", "sem", "t", "df", "p", "ci_lo", "ci_hi"};
    for (const char* name : stats) {
      f << name;
      for (const auto& a : sm.algos) {
        f << sep;
        auto it = sm.ttest.find(a);
        if (it == sm.ttest.end()) {
          f << "";
          continue;
        }
        const TTestResult& r = it->second;
        const std::string n = name;
        if (n == "mean") f << num(r.mean);
        else if (n == "sd") f << num(r.sd);
        else if (n == "sem") f << num(r.sem);
        else if (n == "t") f << num(r.t);
        else if (n == "df") f << r.df;
        else if (n == "p") f << num(r.p);
        else if (n == "ci_lo") f << num(r.ci_lo);
        else f << num(r.ci_hi);
      }
      f << '\n';
    }
  }
  for (std::size_t pi = 0; pi < sm.problems.size(); ++pi) {
    for (std::size_t ai = 0; ai < sm.algos.size(); ++ai) {
      const auto& runs = sm.cells[pi][ai].runs;
      for (std::size_t rep = 0; rep < runs.size(); ++rep) {
        auto f = open_out(base / ("trace_" + sm.problems[pi].id + "_" + sm.algos[ai] + "_" +
                                  std::to_string(rep) + ".csv"));
        f << "iter" << sep << "best_mu_T\n";
        const auto& tr = runs[rep].best_so_far;
        for (std::size_t it = 0; it < tr.size(); ++it)
          f << (it + 1) << sep << num(tr[it]) << '\n';
      }
    }
  }
}

}  // namespace frifc
