#include "frifc/fri.hpp"

#include <algorithm>
#include <stdexcept>

namespace frifc {

std::vector<double> max_product_compose(const FriProblem& p, const std::vector<double>& x) {
  if (x.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("point size does not match n");
  std::vector<double> out(p.m, 0.0);
  for (int i = 0; i < p.m; ++i) {
    double best = 0.0;
    for (int j = 0; j < p.n; ++j) best = std::max(best, p.a(i, j) * x[j]);
    out[i] = best;
  }
  return out;
}

std::vector<double> maximum_solution(const FriProblem& p) {
  std::vector<double> xbar(p.n, 1.0);
  for (int j = 0; j < p.n; ++j)
    for (int i = 0; i < p.m; ++i)
      if (p.a(i, j) > p.b[i]) xbar[j] = std::min(xbar[j], p.b[i] / p.a(i, j));
  return xbar;
}

CrispSolution crisp_optimum(const FriProblem& p) {
  CrispSolution s;
  s.x_bar = maximum_solution(p);
  s.x_star.assign(p.n, 0.0);
  s.z_star = 0.0;
  // Negative costs take the largest feasible value; the rest sit at 0.
  // Zero costs also sit at 0: objective-neutral, but 0 keeps every
  // constraint membership as high as possible.
  for (int j = 0; j < p.n; ++j) {
    if (p.c[j] < 0.0) {
      s.x_star[j] = s.x_bar[j];
      s.z_star += p.c[j] * s.x_bar[j];
    }
  }
  return s;
}

bool is_feasible(const FriProblem& p, const std::vector<double>& x) {
  const auto comp = max_product_compose(p, x);
  for (int i = 0; i < p.m; ++i)
    if (comp[i] > p.b[i]) return false;
  return true;
}

std::pair<std::vector<double>, std::vector<double>>
violation_vectors(const FriProblem& p, const FuzzyParams& fp, const std::vector<double>& x) {
  const auto comp = max_product_compose(p, x);
  std::vector<double> ccv(p.m), fcv(p.m);
  for (int i = 0; i < p.m; ++i) {
    ccv[i] = std::max(0.0, comp[i] - p.b[i]);
    fcv[i] = std::max(0.0, comp[i] - (p.b[i] + fp.d[i]));
  }
  return {ccv, fcv};
}

MembershipReport evaluate(const FriProblem& p, const FuzzyParams& fp, double z0,
                          const std::vector<double>& x) {
  const auto comp = max_product_compose(p, x);
  MembershipReport r;
  r.mu_constraints.resize(p.m);
  r.ccv.resize(p.m);
  r.fcv.resize(p.m);
  r.mu_F = 1.0;
  for (int i = 0; i < p.m; ++i) {
    const double over = comp[i] - p.b[i];
    r.mu_constraints[i] = std::clamp(1.0 - over / fp.d[i], 0.0, 1.0);
    r.mu_F = std::min(r.mu_F, r.mu_constraints[i]);
    r.ccv[i] = std::max(0.0, over);
    r.fcv[i] = std::max(0.0, over - fp.d[i]);
  }
  double obj = 0.0;
  for (int j = 0; j < p.n; ++j) obj += p.c[j] * x[j];
  r.mu_0 = std::clamp(1.0 - (obj - z0) / fp.d0, 0.0, 1.0);
  r.mu_T = std::min(r.mu_0, r.mu_F);
  return r;
}

}  // namespace frifc
