#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frifc/problem.hpp"

namespace frifc {

// One metaheuristic configuration.  Only the fields of the named algorithm
// are read.  All four maximize evaluate(p, fp, z0, x).mu_T over [0,1]^n,
// clamping trial points into the box before evaluation.
struct HeuristicConfig {
  std::string algo;        // "pso", "acor", "de", or "hs"
  int population = 10;
  int iterations = 100;
  std::uint64_t seed = 0;

  // pso: inertia runs linearly from w_start to w_end over the iterations.
  double c1 = 2.0;
  double c2 = 2.0;
  double w_start = 1.0;
  double w_end = 0.0;

  // acor (continuous ant colony): solution archive of size k, guide rank
  // selected with locality q, step widths scaled by xi.
  int k = 50;
  double q = 1e-4;
  double xi = 0.85;

  // de, variant rand/1/bin.
  double cr = 0.95;
  double F = 0.5;

  // hs: harmony memory of hms rows, one improvisation per iteration.
  int hms = 10;
  double hmcr = 0.825;
  double par = 0.35;
  double bw = 0.01;  // absolute pitch step; the box has unit width
};

struct RunTrace {
  std::vector<double> best_so_far;  // one entry per iteration, non-decreasing
  std::vector<double> final_x;
  double final_mu_T = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
};

// Runs one seeded search.  Entry 1 of the trace is the best of the initial
// candidates (population, archive, or memory); each later entry follows one
// generation.  Identical arguments reproduce the trace exactly.
// Throws std::invalid_argument on an unknown algorithm or parameters outside
// their ranges, before any evaluation.
RunTrace run_heuristic(const FriProblem& p, const FuzzyParams& fp, double z0,
                       const HeuristicConfig& cfg);

// The published comparison settings: population 10 and 100 iterations for
// every algorithm, pso c1 = c2 = 2 with inertia 1 -> 0, acor k = 50,
// q = 1e-4, xi = 0.85, de cr = 0.95 and F = 0.5, hs hmcr = 0.825 and
// par = 0.35 (bandwidth 0.01 is this implementation's choice; the source
// protocol leaves it unstated).
std::map<std::string, HeuristicConfig> default_configs();

}  // namespace frifc
