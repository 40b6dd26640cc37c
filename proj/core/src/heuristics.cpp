#include "frifc/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "frifc/fri.hpp"
#include "frifc/rng.hpp"

namespace frifc {

namespace {

struct Search {
  const FriProblem& p;
  const FuzzyParams& fp;
  double z0;
  SplitMix64 rng;

  double fitness(std::vector<double>& x) {
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);
    return evaluate(p, fp, z0, x).mu_T;
  }

  std::vector<double> random_point() {
    std::vector<double> x(p.n);
    for (double& v : x) v = rng.uniform();
    return x;
  }
};

// Running best; every algorithm funnels its evaluations through this so the
// trace is non-decreasing by construction.
struct Best {
  std::vector<double> x;
  double f = -1.0;
  void offer(const std::vector<double>& cand, double fc) {
    if (fc > f) {
      f = fc;
      x = cand;
    }
  }
};

void run_pso(Search& s, const HeuristicConfig& cfg, Best& best, std::vector<double>& trace) {
  const int P = cfg.population, n = s.p.n, T = cfg.iterations;
  std::vector<std::vector<double>> pos(P), vel(P, std::vector<double>(n, 0.0)), pbest(P);
  std::vector<double> pf(P);
  for (int i = 0; i < P; ++i) {
    pos[i] = s.random_point();
    pf[i] = s.fitness(pos[i]);
    pbest[i] = pos[i];
    best.offer(pos[i], pf[i]);
  }
  trace.push_back(best.f);
  for (int t = 1; t < T; ++t) {
    // Inertia falls linearly over the run; with the default 1 -> 0 schedule
    // this is w = 1 - t/T.
    const double w = cfg.w_start + (cfg.w_end - cfg.w_start) * (static_cast<double>(t) / T);
    for (int i = 0; i < P; ++i) {
      for (int dd = 0; dd < n; ++dd) {
        const double r1 = s.rng.uniform();
        const double r2 = s.rng.uniform();
        double v = w * vel[i][dd] + cfg.c1 * r1 * (pbest[i][dd] - pos[i][dd]) +
                   cfg.c2 * r2 * (best.x[dd] - pos[i][dd]);
        vel[i][dd] = std::clamp(v, -1.0, 1.0);
        pos[i][dd] += vel[i][dd];
      }
      const double f = s.fitness(pos[i]);
      if (f > pf[i]) {
        pf[i] = f;
        pbest[i] = pos[i];
      }
      best.offer(pos[i], f);  // the swarm steers toward the updated best at once
    }
    trace.push_back(best.f);
  }
}

void run_de(Search& s, const HeuristicConfig& cfg, Best& best, std::vector<double>& trace) {
  const int P = cfg.population, n = s.p.n, T = cfg.iterations;
  std::vector<std::vector<double>> pop(P);
  std::vector<double> fit(P);
  for (int i = 0; i < P; ++i) {
    pop[i] = s.random_point();
    fit[i] = s.fitness(pop[i]);
    best.offer(pop[i], fit[i]);
  }
  trace.push_back(best.f);
  std::vector<std::vector<double>> next(P);
  for (int t = 1; t < T; ++t) {
    for (int i = 0; i < P; ++i) {
      // rand/1: three distinct donors, none equal to the target.  Small
      // populations cannot supply four distinct indices, so the requirement
      // drops to plain draws there.
      int r1, r2, r3;
      if (P >= 4) {
        do r1 = s.rng.uniform_int(P); while (r1 == i);
        do r2 = s.rng.uniform_int(P); while (r2 == i || r2 == r1);
        do r3 = s.rng.uniform_int(P); while (r3 == i || r3 == r1 || r3 == r2);
      } else {
        r1 = s.rng.uniform_int(P);
        r2 = s.rng.uniform_int(P);
        r3 = s.rng.uniform_int(P);
      }
      const int jr = s.rng.uniform_int(n);
      std::vector<double> trial(n);
      for (int dd = 0; dd < n; ++dd) {
        const bool cross = s.rng.uniform() < cfg.cr || dd == jr;
        trial[dd] = cross ? pop[r1][dd] + cfg.F * (pop[r2][dd] - pop[r3][dd]) : pop[i][dd];
      }
      const double f = s.fitness(trial);
      if (f >= fit[i]) {  // ties move: keeps drifting across plateaus
        next[i] = std::move(trial);
        fit[i] = f;
        best.offer(next[i], f);
      } else {
        next[i] = pop[i];
      }
    }
    pop.swap(next);
    trace.push_back(best.f);
  }
}

void run_acor(Search& s, const HeuristicConfig& cfg, Best& best, std::vector<double>& trace) {
  const int m = cfg.population, n = s.p.n, T = cfg.iterations, k = cfg.k;
  struct Row {
    std::vector<double> x;
    double f;
  };
  std::vector<Row> archive(k);
  for (auto& row : archive) {
    row.x = s.random_point();
    row.f = s.fitness(row.x);
    best.offer(row.x, row.f);
  }
  auto by_fit = [](const Row& a, const Row& b) { return a.f > b.f; };
  std::stable_sort(archive.begin(), archive.end(), by_fit);
  trace.push_back(best.f);

  // Rank weights: a Gaussian kernel over ranks with spread q*k.  With small
  // q nearly all mass sits on the best row.
  std::vector<double> prob(k);
  {
    double sum = 0.0;
    for (int l = 0; l < k; ++l) {
      const double r = static_cast<double>(l) / (cfg.q * k);
      prob[l] = std::exp(-0.5 * r * r);
      sum += prob[l];
    }
    for (double& w : prob) w /= sum;
  }

  for (int t = 1; t < T; ++t) {
    std::vector<Row> ants(m);
    for (int a = 0; a < m; ++a) {
      // Roulette over rank probabilities picks the guiding solution.
      double u = s.rng.uniform();
      int g = k - 1;
      for (int l = 0; l < k; ++l) {
        u -= prob[l];
        if (u < 0.0) {
          g = l;
          break;
        }
      }
      ants[a].x.resize(n);
      for (int dd = 0; dd < n; ++dd) {
        double spread = 0.0;
        for (int e = 0; e < k; ++e) spread += std::abs(archive[e].x[dd] - archive[g].x[dd]);
        const double sigma = cfg.xi * spread / (k - 1);
        ants[a].x[dd] = archive[g].x[dd] + sigma * s.rng.gaussian();
      }
      ants[a].f = s.fitness(ants[a].x);
      best.offer(ants[a].x, ants[a].f);
    }
    for (auto& ant : ants) archive.push_back(std::move(ant));
    std::stable_sort(archive.begin(), archive.end(), by_fit);
    archive.resize(k);
    trace.push_back(best.f);
  }
}

void run_hs(Search& s, const HeuristicConfig& cfg, Best& best, std::vector<double>& trace) {
  const int H = cfg.hms, n = s.p.n, T = cfg.iterations;
  std::vector<std::vector<double>> mem(H);
  std::vector<double> fit(H);
  for (int i = 0; i < H; ++i) {
    mem[i] = s.random_point();
    fit[i] = s.fitness(mem[i]);
    best.offer(mem[i], fit[i]);
  }
  trace.push_back(best.f);
  for (int t = 1; t < T; ++t) {
    std::vector<double> x(n);
    for (int dd = 0; dd < n; ++dd) {
      if (s.rng.uniform() < cfg.hmcr) {
        x[dd] = mem[s.rng.uniform_int(H)][dd];
        if (s.rng.uniform() < cfg.par)
          x[dd] += cfg.bw * (2.0 * s.rng.uniform() - 1.0);
      } else {
        x[dd] = s.rng.uniform();
      }
    }
    const double f = s.fitness(x);
    int worst = 0;
    for (int i = 1; i < H; ++i)
      if (fit[i] < fit[worst]) worst = i;
    if (f > fit[worst]) {
      mem[worst] = x;
      fit[worst] = f;
    }
    best.offer(x, f);
    trace.push_back(best.f);
  }
}

void check(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void validate_config(const HeuristicConfig& cfg) {
  check(cfg.population >= 2, "population must be at least 2");
  check(cfg.iterations >= 1, "iterations must be at least 1");
  if (cfg.algo == "pso") {
    check(std::isfinite(cfg.c1) && cfg.c1 >= 0, "c1 must be nonnegative");
    check(std::isfinite(cfg.c2) && cfg.c2 >= 0, "c2 must be nonnegative");
    check(std::isfinite(cfg.w_start) && std::isfinite(cfg.w_end), "inertia must be finite");
  } else if (cfg.algo == "acor") {
    check(cfg.k >= 2, "archive size must be at least 2");
    check(cfg.q > 0, "locality q must be positive");
    check(cfg.xi > 0, "xi must be positive");
  } else if (cfg.algo == "de") {
    check(cfg.cr >= 0 && cfg.cr <= 1, "crossover rate must lie in [0,1]");
    check(cfg.F > 0, "scale factor must be positive");
  } else if (cfg.algo == "hs") {
    check(cfg.hms >= 1, "harmony memory must hold at least one row");
    check(cfg.hmcr >= 0 && cfg.hmcr <= 1, "memory consideration rate must lie in [0,1]");
    check(cfg.par >= 0 && cfg.par <= 1, "pitch adjustment rate must lie in [0,1]");
    check(cfg.bw >= 0, "bandwidth must be nonnegative");
  } else {
    throw std::invalid_argument("unknown algorithm '" + cfg.algo + "'");
  }
}

}  // namespace

RunTrace run_heuristic(const FriProblem& p, const FuzzyParams& fp, double z0,
                       const HeuristicConfig& cfg) {
  validate_config(cfg);
  validate(p, fp);
  const auto t0 = std::chrono::steady_clock::now();

  Search s{p, fp, z0, SplitMix64(cfg.seed)};
  Best best;
  RunTrace out;
  out.seed = cfg.seed;
  out.best_so_far.reserve(cfg.iterations);

  if (cfg.algo == "pso")
    run_pso(s, cfg, best, out.best_so_far);
  else if (cfg.algo == "acor")
    run_acor(s, cfg, best, out.best_so_far);
  else if (cfg.algo == "de")
    run_de(s, cfg, best, out.best_so_far);
  else
    run_hs(s, cfg, best, out.best_so_far);

  out.final_x = best.x;
  out.final_mu_T = best.f;
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::map<std::string, HeuristicConfig> default_configs() {
  std::map<std::string, HeuristicConfig> m;
  for (const char* name : {"pso", "acor", "de", "hs"}) {
    HeuristicConfig cfg;  // field defaults are the published settings
    cfg.algo = name;
    m[name] = cfg;
  }
  return m;
}

}  // namespace frifc
