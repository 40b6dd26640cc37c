#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace frifc {

// Linear cost minimization over [0,1]^n subject to the max-product relational
// system A o x <= b, where (A o x)_i = max_j a_ij * x_j.  All a_ij and b_i
// live in [0,1]; the costs c_j are unrestricted.
struct FriProblem {
  int m = 0;  // constraints
  int n = 0;  // variables
  std::vector<double> A;  // row-major, m*n entries in [0,1]
  std::vector<double> b;  // m entries in [0,1]
  std::vector<double> c;  // n cost coefficients
  std::string id;

  double a(int i, int j) const { return A[static_cast<std::size_t>(i) * n + j]; }
};

// Tolerances of the fuzzified model: each constraint i may be violated by up
// to d_i before its membership drops to zero, the objective band has width d0,
// and v in (0,1) positions the band's lower end at z* - v*d0.
struct FuzzyParams {
  std::vector<double> d;  // m entries, all > 0
  double d0 = 0.1;
  double v = 0.5;

  static FuzzyParams uniform(int m, double d, double d0, double v);
};

struct ParseError : std::runtime_error {
  int line;  // 1-based line number in the input text
  ParseError(int line_, const std::string& what_);
};

// Throws std::invalid_argument when a field violates the model's domain
// (empty dimensions, entries of A or b outside [0,1], non-finite costs).
void validate(const FriProblem& p);
void validate(const FriProblem& p, const FuzzyParams& fp);

// Text format: first non-comment line "m n", then one line with the n costs,
// then m matrix rows, then one line with the m right-hand sides.  Lines whose
// first non-blank character is '#' are comments.
FriProblem parse_problem(std::istream& in, std::string id = "");
FriProblem parse_problem_file(const std::string& path);

// Emits the same format at full double precision, so parse(write(p))
// round-trips every numeric field exactly.
std::string write_problem(const FriProblem& p);

// Deterministic random instance: a_ij, b_i ~ U[0,1], c_j ~ U[-10,10].
// Draw order is c, then A row by row, then b.
FriProblem gen_random(int m, int n, std::uint64_t seed);

}  // namespace frifc
