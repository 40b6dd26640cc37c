#pragma once

#include <utility>
#include <vector>

#include "frifc/problem.hpp"

namespace frifc {

// Closed-form crisp solution.  x_bar is the componentwise maximum feasible
// point; x_star keeps x_bar where the cost is negative and drops to 0
// elsewhere, which minimizes c.x over the feasible box.
struct CrispSolution {
  std::vector<double> x_bar;
  std::vector<double> x_star;
  double z_star = 0;
};

// (A o x)_i = max_j a_ij * x_j.  Defined as 0 when n = 0.
std::vector<double> max_product_compose(const FriProblem& p, const std::vector<double>& x);

// x_bar_j = min over {i : a_ij > b_i} of b_i / a_ij, or 1 when no row caps j.
std::vector<double> maximum_solution(const FriProblem& p);

CrispSolution crisp_optimum(const FriProblem& p);

// Crisp feasibility, ties allowed: max_j a_ij x_j <= b_i for every i.
bool is_feasible(const FriProblem& p, const std::vector<double>& x);

// Memberships and violations at a point.  mu_constraints uses the ramp that
// is 1 up to b_i, falls linearly over [b_i, b_i + d_i], and is 0 beyond;
// mu_0 uses the same shape over [z0, z0 + d0] applied to c.x.
struct MembershipReport {
  std::vector<double> mu_constraints;  // m entries
  double mu_F = 0;  // min over constraints
  double mu_0 = 0;  // objective-band membership
  double mu_T = 0;  // min(mu_0, mu_F)
  std::vector<double> ccv;  // max(0, (A o x)_i - b_i)
  std::vector<double> fcv;  // max(0, (A o x)_i - (b_i + d_i))
};

// (ccv, fcv) without the membership bookkeeping.
std::pair<std::vector<double>, std::vector<double>>
violation_vectors(const FriProblem& p, const FuzzyParams& fp, const std::vector<double>& x);

MembershipReport evaluate(const FriProblem& p, const FuzzyParams& fp, double z0,
                          const std::vector<double>& x);

}  // namespace frifc
