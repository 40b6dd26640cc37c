#include "frifc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace frifc {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::iteration_limit: return "iteration_limit";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum Where : signed char { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

// Bounded-variable two-phase simplex over the tableau B^-1 [R | I].
// Slacks get range [0, inf); everything else must come in with finite
// bounds.  Nonbasic variables sit at a bound; basic values derive from
// beta = B^-1 rhs and the nonbasic offsets.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, double feas_tol, double pivot_tol)
      : n_(lp.num_vars),
        k_(static_cast<int>(lp.rows.size())),
        N_(n_ + k_),
        ftol_(feas_tol),
        ptol_(pivot_tol) {
    lo_.resize(N_);
    hi_.resize(N_);
    obj_.assign(N_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lp.lower[j];
      hi_[j] = lp.upper[j];
      obj_[j] = lp.objective[j];
    }
    for (int i = 0; i < k_; ++i) {
      lo_[n_ + i] = 0.0;
      hi_[n_ + i] = kInf;
    }
    tab_.assign(k_, std::vector<double>(N_, 0.0));
    beta_.resize(k_);
    basis_.resize(k_);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < n_; ++j) tab_[i][j] = lp.rows[i][j];
      tab_[i][n_ + i] = 1.0;
      beta_[i] = lp.rhs[i];
      basis_[i] = n_ + i;
    }
    where_.assign(N_, kAtLower);
    val_.resize(N_);
    for (int j = 0; j < N_; ++j) val_[j] = lo_[j];
    for (int i = 0; i < k_; ++i) where_[n_ + i] = kBasic;
    xb_.resize(k_);
  }

  LpSolution run(long iter_cap) {
    LpSolution out;
    bool bland = false;
    int degen_streak = 0;
    long iter = 0;
    for (;; ++iter) {
      if (iter >= iter_cap) {
        out.status = LpStatus::iteration_limit;
        break;
      }
      compute_basics();

      // Phase check: any basic value outside its range beyond tolerance?
      bool infeas = false;
      for (int i = 0; i < k_ && !infeas; ++i) {
        const int bv = basis_[i];
        infeas = xb_[i] < lo_[bv] - ftol_ || xb_[i] > hi_[bv] + ftol_;
      }

      // Price nonbasic columns.  Phase 1 minimizes total bound violation,
      // whose gradient along column j is sum_i sigma_i tab[i][j] with
      // sigma = +1 below range and -1 above; phase 2 uses reduced costs of
      // the real (maximized) objective.
      int enter = -1, dir = 0;
      double best_rate = 0.0;
      std::vector<double> sigma;
      if (infeas) {
        sigma.assign(k_, 0.0);
        for (int i = 0; i < k_; ++i) {
          const int bv = basis_[i];
          if (xb_[i] < lo_[bv] - ftol_)
            sigma[i] = 1.0;
          else if (xb_[i] > hi_[bv] + ftol_)
            sigma[i] = -1.0;
        }
      }
      for (int j = 0; j < N_; ++j) {
        if (where_[j] == kBasic || hi_[j] - lo_[j] <= 0.0) continue;
        double g;
        if (infeas) {
          g = 0.0;
          for (int i = 0; i < k_; ++i)
            if (sigma[i] != 0.0) g += sigma[i] * tab_[i][j];
          g = -g;  // flip so that g > 0 means "increasing x_j improves"
        } else {
          g = obj_[j];
          for (int i = 0; i < k_; ++i)
            if (obj_[basis_[i]] != 0.0) g -= obj_[basis_[i]] * tab_[i][j];
        }
        int d = 0;
        if (g > 1e-9 && where_[j] == kAtLower)
          d = 1;
        else if (g < -1e-9 && where_[j] == kAtUpper)
          d = -1;
        if (d == 0) continue;
        if (bland) {  // first eligible index
          enter = j;
          dir = d;
          break;
        }
        if (std::abs(g) > best_rate) {
          best_rate = std::abs(g);
          enter = j;
          dir = d;
        }
      }

      if (enter < 0) {
        if (infeas) {
          out.status = LpStatus::infeasible;
        } else {
          out.status = LpStatus::optimal;
        }
        break;
      }

      // Ratio test.  Basic rows block when they reach the bound ahead of
      // them; a row already outside its range blocks where it re-enters the
      // range (that point is a gradient break of the phase-1 objective).
      double t_best = hi_[enter] - lo_[enter];  // bound flip distance
      int leave = -1;
      double leave_target = 0.0;
      for (int i = 0; i < k_; ++i) {
        const double a = tab_[i][enter] * dir;  // basic value falls at rate a
        if (std::abs(tab_[i][enter]) <= ptol_) continue;
        const int bv = basis_[i];
        double target, t;
        if (a > 0.0) {
          if (xb_[i] > hi_[bv] + ftol_)
            target = hi_[bv];
          else if (lo_[bv] == -kInf)
            continue;
          else
            target = lo_[bv];
          if (xb_[i] < target - ftol_) continue;  // moving away from the range
          t = (xb_[i] - target) / a;
        } else {
          if (xb_[i] < lo_[bv] - ftol_)
            target = lo_[bv];
          else if (hi_[bv] == kInf)
            continue;
          else
            target = hi_[bv];
          if (xb_[i] > target + ftol_) continue;
          t = (target - xb_[i]) / (-a);
        }
        t = std::max(t, 0.0);
        const bool take =
            t < t_best - 1e-12 ||
            (t < t_best + 1e-12 && leave >= 0 &&
             std::abs(tab_[i][enter]) > std::abs(tab_[leave][enter]));
        if (take) {
          t_best = t;
          leave = i;
          leave_target = target;
        }
      }

      if (t_best == kInf) {
        // No blocking bound in sight.  In phase 2 this is a genuine
        // unbounded ray.  In phase 1 the violation is bounded below by
        // zero, so an unblocked ray only means every useful pivot fell
        // under the stability cutoff; report the instance infeasible at
        // these tolerances rather than loop.
        out.status = infeas ? LpStatus::infeasible : LpStatus::unbounded;
        break;
      }

      if (t_best <= 1e-11) {
        if (++degen_streak >= 50) bland = true;
      } else {
        degen_streak = 0;
        bland = false;
      }

      if (leave < 0) {
        // The entering variable crosses its whole range: a bound flip.
        where_[enter] = dir > 0 ? kAtUpper : kAtLower;
        val_[enter] = dir > 0 ? hi_[enter] : lo_[enter];
        continue;
      }

      // Pivot: enter replaces basis_[leave], which retreats to the bound it
      // hit.  Classical row reduction keeps tab = B^-1 [R | I] current.
      const double piv = tab_[leave][enter];
      const double inv = 1.0 / piv;
      auto& prow = tab_[leave];
      for (int j = 0; j < N_; ++j) prow[j] *= inv;
      beta_[leave] *= inv;
      prow[enter] = 1.0;  // exact, instead of piv/piv
      for (int i = 0; i < k_; ++i) {
        if (i == leave) continue;
        const double f = tab_[i][enter];
        if (f == 0.0) continue;
        auto& row = tab_[i];
        for (int j = 0; j < N_; ++j) row[j] -= f * prow[j];
        row[enter] = 0.0;
        beta_[i] -= f * beta_[leave];
      }
      const int old = basis_[leave];
      where_[old] = leave_target == lo_[old] ? kAtLower : kAtUpper;
      val_[old] = leave_target;
      const double enter_val =
          (where_[enter] == kAtLower ? lo_[enter] : hi_[enter]) + dir * t_best;
      basis_[leave] = enter;
      where_[enter] = kBasic;
      val_[enter] = enter_val;  // informational; basics are recomputed
    }

    compute_basics();
    out.iterations = static_cast<int>(iter);
    out.values.resize(n_);
    for (int j = 0; j < n_; ++j) out.values[j] = val_[j];
    for (int i = 0; i < k_; ++i)
      if (basis_[i] < n_) out.values[basis_[i]] = xb_[i];
    out.objective = 0.0;
    for (int j = 0; j < n_; ++j) out.objective += obj_[j] * out.values[j];
    return out;
  }

 private:
  void compute_basics() {
    for (int i = 0; i < k_; ++i) xb_[i] = beta_[i];
    for (int j = 0; j < N_; ++j) {
      if (where_[j] == kBasic || val_[j] == 0.0) continue;
      const double v = val_[j];
      for (int i = 0; i < k_; ++i) xb_[i] -= tab_[i][j] * v;
    }
  }

  int n_, k_, N_;
  double ftol_, ptol_;
  std::vector<double> lo_, hi_, obj_, beta_, val_, xb_;
  std::vector<std::vector<double>> tab_;
  std::vector<int> basis_;
  std::vector<signed char> where_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double feas_tol, double pivot_tol) {
  const int n = lp.num_vars;
  const auto rows = lp.rows.size();
  if (n < 0 || lp.objective.size() != static_cast<std::size_t>(n) ||
      lp.lower.size() != static_cast<std::size_t>(n) ||
      lp.upper.size() != static_cast<std::size_t>(n) ||
      lp.rhs.size() != rows)
    throw std::invalid_argument("lp shape mismatch");
  for (const auto& r : lp.rows)
    if (r.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("lp row width mismatch");
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(lp.lower[j]) || !std::isfinite(lp.upper[j]))
      throw std::invalid_argument("variable bounds must be finite");
    if (!std::isfinite(lp.objective[j]))
      throw std::invalid_argument("objective must be finite");
  }
  for (int j = 0; j < n; ++j) {
    if (lp.lower[j] > lp.upper[j]) {
      LpSolution out;
      out.status = LpStatus::infeasible;
      return out;
    }
  }
  if (!(feas_tol > 0.0) || !(pivot_tol > 0.0))
    throw std::invalid_argument("tolerances must be positive");

  Simplex s(lp, feas_tol, pivot_tol);
  const long cap = 10000L * (static_cast<long>(rows) + n + 1);
  return s.run(cap);
}

}  // namespace frifc
