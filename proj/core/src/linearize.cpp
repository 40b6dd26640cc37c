#include "frifc/linearize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace frifc {

namespace {

// Coefficient view shared by the LP builder, the bisection oracle, and the
// solution reconstruction, so the three can never drift apart.
struct LevelCoeffs {
  std::vector<double> D, B;          // per source row
  double D0, B0, z0, fixed_cost;
  double lambda_abs;                 // 1 + max_i B_i
  std::vector<std::vector<int>> rows_for;  // per column: rows whose cell binds it
  std::vector<char> has_rows;              // per source row: any active cell

  LevelCoeffs(const SimplifiedProblem& sp, const FuzzyParams& fp, double z_star) {
    const FriProblem& p = sp.origin;
    validate(p, fp);
    z0 = z_star - fp.v * fp.d0;
    D.resize(p.m);
    B.resize(p.m);
    double maxB = 0.0;  // every B_i exceeds 1, so 0 is a safe floor
    for (int i = 0; i < p.m; ++i) {
      D[i] = 1.0 / fp.d[i];
      B[i] = 1.0 + p.b[i] / fp.d[i];
      maxB = std::max(maxB, B[i]);
    }
    D0 = 1.0 / fp.d0;
    B0 = 1.0 + z0 / fp.d0;
    lambda_abs = 1.0 + maxB;
    fixed_cost = 0.0;
    for (const auto& [j, value] : sp.fixed) fixed_cost += p.c[j] * value;
    rows_for.resize(p.n);
    has_rows.assign(p.m, 0);
    for (int i = 0; i < p.m; ++i) {
      for (int j : sp.J_prime_i[i]) {
        rows_for[j].push_back(i);
        has_rows[i] = 1;
      }
    }
  }

  // Largest value of column j compatible with level l, given its rows.
  // Cells with a zero coefficient impose no cap (their row only needs
  // l <= B_i, checked separately).
  double cap(const FriProblem& p, int j, double l) const {
    double c = 1.0;
    for (int i : rows_for[j]) {
      const double aij = p.a(i, j);
      if (aij > 0.0) c = std::min(c, (B[i] - l) / (D[i] * aij));
    }
    return std::clamp(c, 0.0, 1.0);
  }

  // Cost-minimal point at level l: negative costs push to their cap, the
  // rest to 0.  Also the tie-break applied to the simplex solution.
  std::vector<double> capped_point(const SimplifiedProblem& sp, double l) const {
    const FriProblem& p = sp.origin;
    std::vector<double> x(p.n, 0.0);
    for (const auto& [j, value] : sp.fixed) x[j] = value;
    for (int j : sp.J_prime)
      if (p.c[j] < 0.0) x[j] = cap(p, j, l);
    return x;
  }

  bool achievable(const SimplifiedProblem& sp, double l) const {
    const FriProblem& p = sp.origin;
    for (int i = 0; i < p.m; ++i)
      if (has_rows[i] && l > B[i]) return false;
    const auto x = capped_point(sp, l);
    double obj = fixed_cost;
    for (int j : sp.J_prime) obj += p.c[j] * x[j];
    return D0 * obj + l <= B0;
  }
};

}  // namespace

LinearProgram build_lp(const SimplifiedProblem& sp, const FuzzyParams& fp, double z_star) {
  const FriProblem& p = sp.origin;
  LevelCoeffs lc(sp, fp, z_star);

  LinearProgram lp;
  lp.num_x = static_cast<int>(sp.J_prime.size());
  lp.num_vars = lp.num_x + 1;
  lp.free_cols = sp.J_prime;
  const int L = lp.num_x;  // index of the level variable

  std::vector<int> lpvar(p.n, -1);
  for (int v = 0; v < lp.num_x; ++v) lpvar[sp.J_prime[v]] = v;

  lp.objective.assign(lp.num_vars, 0.0);
  lp.objective[L] = 1.0;
  lp.lower.assign(lp.num_vars, 0.0);
  lp.upper.assign(lp.num_vars, 1.0);
  lp.lower[L] = -lc.lambda_abs;
  lp.upper[L] = lc.lambda_abs;

  for (int i = 0; i < p.m; ++i) {
    for (int j : sp.J_prime_i[i]) {
      std::vector<double> row(lp.num_vars, 0.0);
      row[lpvar[j]] = lc.D[i] * p.a(i, j);
      row[L] = 1.0;
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(lc.B[i]);
    }
  }
  std::vector<double> objrow(lp.num_vars, 0.0);
  for (int v = 0; v < lp.num_x; ++v) objrow[v] = lc.D0 * p.c[sp.J_prime[v]];
  objrow[L] = 1.0;
  lp.rows.push_back(std::move(objrow));
  lp.rhs.push_back(lc.B0 - lc.D0 * lc.fixed_cost);

  lp.D = std::move(lc.D);
  lp.B = std::move(lc.B);
  lp.D0 = lc.D0;
  lp.B0 = lc.B0;
  lp.z0 = lc.z0;
  lp.fixed_cost = lc.fixed_cost;
  return lp;
}

BisectionResult maximin_bisection(const SimplifiedProblem& sp, const FuzzyParams& fp,
                                  double z_star, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  const LevelCoeffs lc(sp, fp, z_star);

  // Levels up to 1 - v are always achievable (the crisp optimum witnesses
  // them), so the lower end of the bracket is achievable and the invariant
  // "lo achievable, hi not" holds from the start.
  double lo = -lc.lambda_abs;
  double hi = lc.lambda_abs;
  if (lc.achievable(sp, hi)) {
    lo = hi;  // whole bracket achievable; can't happen for v in (0,1)
  } else {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      (lc.achievable(sp, mid) ? lo : hi) = mid;
    }
  }
  BisectionResult r;
  r.lambda = lo;
  r.x = lc.capped_point(sp, lo);
  return r;
}

double level_optimum(const SimplifiedProblem& sp, const FuzzyParams& fp, double z_star) {
  const LinearProgram lp = build_lp(sp, fp, z_star);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("level LP unexpectedly " + to_string(sol.status));
  return sol.values[lp.num_x];
}

SolveReport solve_fri_fc(const FriProblem& p, const FuzzyParams& fp,
                         const SimplifyToggles& toggles) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(p, fp);

  SolveReport rep;
  rep.crisp = crisp_optimum(p);
  const SimplifiedProblem sp = simplify_problem(p, toggles);
  const LevelCoeffs lc(sp, fp, rep.crisp.z_star);

  const LinearProgram lp = build_lp(sp, fp, rep.crisp.z_star);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("level LP unexpectedly " + to_string(sol.status) + " on '" +
                             p.id + "'");

  rep.lambda_star = sol.values[lp.num_x];
  // The capped point at the optimal level: reproducible regardless of which
  // optimal vertex the simplex happened to stop at.
  rep.x_star_star = lc.capped_point(sp, rep.lambda_star);
  rep.z0 = lc.z0;
  rep.interval_lo = lc.z0;
  rep.interval_hi = lc.z0 + fp.d0;
  rep.report = evaluate(p, fp, lc.z0, rep.x_star_star);
  rep.obj_value = 0.0;
  for (int j = 0; j < p.n; ++j) rep.obj_value += p.c[j] * rep.x_star_star[j];

  double ccv_sum = 0.0;
  for (double v : rep.report.ccv) ccv_sum += v;
  rep.error = 0.5 * (ccv_sum / p.m + std::abs(lc.z0 - rep.obj_value));

  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace frifc
