#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frifc/heuristics.hpp"
#include "frifc/linearize.hpp"
#include "frifc/problem.hpp"

namespace frifc {

// Quality of a candidate x against the fuzzy instance: half the mean crisp
// constraint violation plus half the distance of c.x from the band floor z0.
// Zero exactly for feasible points that reach z0.
double error_metric(const FriProblem& p, const FuzzyParams& fp, double z0,
                    const std::vector<double>& x);

struct RunStats {
  double avg = 0;
  double mdn = 0;
  double sd = 0;  // sample standard deviation, divisor n-1
};

// Statistics of final_mu_T across repetitions.  Throws on an empty list.
RunStats summarize_runs(const std::vector<RunTrace>& traces);

struct TTestResult {
  double mean = 0;
  double sd = 0;
  double sem = 0;
  double t = 0;
  int df = 0;
  double p = 0;       // two-sided
  double ci_lo = 0;   // 95% interval: mean +- t_{0.975,df} * sem
  double ci_hi = 0;
};

// Classical paired t-test on a difference sample, df = count - 1.  Throws
// std::invalid_argument on fewer than two observations or zero variance.
TTestResult paired_t_test(const std::vector<double>& diffs);

struct AlgoCell {
  std::vector<RunTrace> runs;
  RunStats stats;       // over final_mu_T
  double avg_error = 0; // mean error_metric of the runs' final points
  double avg_seconds = 0;
};

struct ProblemRow {
  std::string id;
  SolveReport exact;  // error and runtime filled
};

struct BenchSummary {
  std::vector<ProblemRow> problems;
  std::vector<std::string> algos;
  std::vector<std::vector<AlgoCell>> cells;  // indexed [problem][algo]
  // Per algorithm: t-test over the per-problem differences
  // (exact mu_T minus the algorithm's mean final mu_T).  Present only when
  // the sample is large enough and not degenerate.
  std::map<std::string, TTestResult> ttest;
  double exact_mse = 0;  // mean squared error over problems
  std::map<std::string, double> algo_mse;
};

// Runs the exact solver once per problem and each named algorithm
// `repetitions` times at `iterations` generations, with per-run seeds derived
// from master_seed by hashing (problem, algorithm, repetition) indices, so
// any cell can be reproduced in isolation.
BenchSummary run_suite(const std::vector<FriProblem>& problems, const FuzzyParams& fp,
                       const std::vector<std::string>& algorithms, int repetitions,
                       int iterations, std::uint64_t master_seed);

// The seed the suite hands to repetition `rep` of `algo_index` on
// `problem_index`.
std::uint64_t derive_seed(std::uint64_t master_seed, int problem_index,
                          int algo_index, int rep);

// Writes table1.csv, table2.csv, table5.csv, table6.csv, table7.csv and one
// trace_<id>_<algo>_<rep>.csv per run into dir (created if needed).  Numbers
// are written at full precision; sep is ',' or '\t'.
void write_tables(const BenchSummary& summary, const std::string& dir, char sep = ',');

}  // namespace frifc
