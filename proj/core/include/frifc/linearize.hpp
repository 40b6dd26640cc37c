#pragma once

#include <utility>
#include <vector>

#include "frifc/fri.hpp"
#include "frifc/lp.hpp"
#include "frifc/problem.hpp"
#include "frifc/simplify.hpp"

namespace frifc {

// The level model.  Write D_i = 1/d_i, B_i = 1 + b_i/d_i, B_0 = 1 + z0/d0
// with z0 = z* - v*d0.  Maximizing the worst membership is the LP
//
//   max L  s.t.  D_i a_ij x_j + L <= B_i   for each row i and j in J'_i,
//                D_0 (sum_j c_j x_j + fixed_cost) + L <= B_0,
//                x_j in [0,1],  L in [-(1+max_i B_i), 1+max_i B_i].
//
// Coefficients come from sp.origin; rows and columns come from sp's index
// sets.  Throws std::invalid_argument when some d_i <= 0 or d0 <= 0.
LinearProgram build_lp(const SimplifiedProblem& sp, const FuzzyParams& fp, double z_star);

// Independent check of the same optimum that never touches the simplex.
// For a trial level L every free column is capped at
//   cap_j(L) = clamp(min over i with j in J'_i of (B_i - L) / (D_i a_ij), 0, 1)
// (cap 1 when no row lists j), and L is achievable iff L <= B_i for every
// row with active cells and D_0 (c . cap + fixed_cost) + L <= B_0.
// Achievability is monotone in L, so bisection closes in on the optimum.
// Returns the largest achievable level and the capped point in original
// coordinates (fixed components included).
struct BisectionResult {
  double lambda = 0;
  std::vector<double> x;
};
BisectionResult maximin_bisection(const SimplifiedProblem& sp, const FuzzyParams& fp,
                                  double z_star, double tol = 1e-10);

// Level optimum of the reduced instance via build_lp + solve_lp.
double level_optimum(const SimplifiedProblem& sp, const FuzzyParams& fp, double z_star);

struct SolveReport {
  std::vector<double> x_star_star;  // fuzzy super-optimum, original coordinates
  double lambda_star = 0;
  MembershipReport report;          // memberships and violations at x**
  double z0 = 0;
  double interval_lo = 0;           // the objective band [z0, z0 + d0]
  double interval_hi = 0;
  double obj_value = 0;             // c . x**
  CrispSolution crisp;
  double error = 0;                 // benchmark error metric, filled by the harness
  double runtime_seconds = 0;
};

// Full pipeline: crisp optimum, reductions, level LP, then the capped point
// at the optimal level (the unique cost-minimal choice there, since every
// surviving cost is negative; it also makes the objective row active).
SolveReport solve_fri_fc(const FriProblem& p, const FuzzyParams& fp,
                         const SimplifyToggles& toggles = {});

}  // namespace frifc
