#pragma once

#include <map>
#include <vector>

#include "frifc/problem.hpp"

namespace frifc {

// Reduced instance fed to the level model.  J_prime lists the columns that
// stay free (negative cost); fixed maps every other column to its assigned
// constant (0 for nonnegative cost, 1 for free columns no row can cap).
// J_prime_i[i] lists the free columns whose cell in row i can actually bind
// (a_ij > b_i, taken on the original matrix: the zeroed matrix A_prime keeps
// the crisp feasible set intact but would overstate how far a cell may be
// pushed at membership levels below 1, so the level model never reads it).
struct SimplifiedProblem {
  std::vector<double> A_prime;               // row-major, after first-rule zeroing
  std::vector<int> J_prime;                  // ascending column indices
  std::vector<std::vector<int>> J_prime_i;   // per row, ascending
  std::map<int, double> fixed;               // column -> 0.0 or 1.0
  FriProblem origin;
};

// Zero every cell that some other row caps more tightly: a'_ij = 0 when
// a_ij >= b_i and some row k has a_kj > b_k with b_i/a_ij > b_k/a_kj
// (strictly; ties keep both cells).  Leaves the crisp feasible set unchanged.
std::vector<double> first_simplification(const FriProblem& p);

// Columns with nonnegative cost take value 0 at any optimum; the rest stay.
struct SecondSimplification {
  std::vector<int> J_prime;
  std::vector<int> fixed_zero;
};
SecondSimplification second_simplification(const FriProblem& p);

// Per-row active cells over the given matrix, plus the free columns no row
// can cap at all; those take value 1 (their cost is negative, so 1 is best).
struct ThirdSimplification {
  std::vector<std::vector<int>> J_prime_i;
  std::vector<int> fixed_one;
};
ThirdSimplification third_simplification(const std::vector<double>& A, int m, int n,
                                         const std::vector<double>& b,
                                         const std::vector<int>& J_prime);

// Which reductions simplify_problem applies.  Disabling a rule keeps the
// corresponding columns free / rows unrestricted; the level optimum must not
// change either way (the reductions are exact), which the tests verify.
struct SimplifyToggles {
  bool rule1 = true;  // zeroing (display only; never feeds the level model)
  bool rule2 = true;  // fix nonnegative-cost columns to 0
  bool rule3 = true;  // restrict rows to binding cells, fix uncapped columns to 1
};

SimplifiedProblem simplify_problem(const FriProblem& p, const SimplifyToggles& t = {});

}  // namespace frifc
