#pragma once

#include <string>
#include <vector>

namespace frifc {

// Small dense LP: maximize objective . x subject to rows[i] . x <= rhs[i]
// and lower <= x <= upper (all bounds finite).  The level-model builder
// fills the metadata block below; the solver ignores it.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  // Level-model metadata (see linearize.hpp).  Variables 0..num_x-1 are the
  // surviving columns listed in free_cols; variable num_x is the level.
  int num_x = 0;
  std::vector<int> free_cols;
  std::vector<double> D;  // 1/d_i per source row
  std::vector<double> B;  // 1 + b_i/d_i per source row
  double D0 = 0;
  double B0 = 0;
  double z0 = 0;
  double fixed_cost = 0;  // c . (fixed part), constant in the objective row
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

std::string to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> values;
  double objective = 0;
  int iterations = 0;
};

// Bounded-variable two-phase simplex, Dantzig pricing with a Bland fallback
// after a degeneracy streak.  Deterministic: identical input gives identical
// output.  Throws std::invalid_argument on non-finite bounds or shape errors.
LpSolution solve_lp(const LinearProgram& lp, double feas_tol = 1e-9,
                    double pivot_tol = 1e-10);

}  // namespace frifc
