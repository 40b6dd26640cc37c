#pragma once

#include <vector>

#include "frifc/problem.hpp"

namespace frifc {

// Published reference solution for one benchmark problem, at the standard
// settings v = 0.5 and d_i = d0 = 0.1.  Values carry the print precision of
// the source tables (4 decimals); the tests state tolerances accordingly.
struct AppendixReference {
  double mu_T = 0;        // best attainable total membership (= mu_F = mu_0 here)
  double obj_super = 0;   // c.x** at the fuzzy optimum
  double obj_crisp = 0;   // c.x* at the crisp optimum
  double z0 = 0;          // lower end of the objective band
  double z0_plus_d0 = 0;  // upper end
  std::vector<double> x_star;       // crisp optimum
  std::vector<double> x_star_star;  // fuzzy super-optimum
  std::vector<double> ccv;          // crisp constraint violations at x**
  double error = 0;       // benchmark error metric of x**
};

struct AppendixEntry {
  FriProblem problem;
  AppendixReference ref;
};

// The ten benchmark instances A.1..A.10 with their reference solutions.
const std::vector<AppendixEntry>& appendix_suite();

}  // namespace frifc
