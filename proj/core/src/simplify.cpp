#include "frifc/simplify.hpp"

#include <algorithm>

namespace frifc {

std::vector<double> first_simplification(const FriProblem& p) {
  std::vector<double> Ap = p.A;
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i < p.m; ++i) {
      const double aij = p.a(i, j);
      if (aij < p.b[i] || aij == 0.0) continue;
      // Some other row caps column j strictly tighter than row i would, so
      // row i's cell can never be the binding one.  Strict comparison: on a
      // ratio tie both cells stay.
      for (int k = 0; k < p.m; ++k) {
        if (k == i) continue;
        const double akj = p.a(k, j);
        if (akj > p.b[k] && p.b[i] / aij > p.b[k] / akj) {
          Ap[static_cast<std::size_t>(i) * p.n + j] = 0.0;
          break;
        }
      }
    }
  }
  return Ap;
}

SecondSimplification second_simplification(const FriProblem& p) {
  SecondSimplification s;
  for (int j = 0; j < p.n; ++j) {
    if (p.c[j] < 0.0)
      s.J_prime.push_back(j);
    else
      s.fixed_zero.push_back(j);
  }
  return s;
}

ThirdSimplification third_simplification(const std::vector<double>& A, int m, int n,
                                         const std::vector<double>& b,
                                         const std::vector<int>& J_prime) {
  ThirdSimplification t;
  t.J_prime_i.resize(m);
  std::vector<char> capped(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i) {
    for (int j : J_prime) {
      if (A[static_cast<std::size_t>(i) * n + j] > b[i]) {
        t.J_prime_i[i].push_back(j);
        capped[j] = 1;
      }
    }
  }
  for (int j : J_prime)
    if (!capped[j]) t.fixed_one.push_back(j);
  return t;
}

SimplifiedProblem simplify_problem(const FriProblem& p, const SimplifyToggles& tg) {
  SimplifiedProblem sp;
  sp.origin = p;
  sp.A_prime = tg.rule1 ? first_simplification(p) : p.A;

  if (tg.rule2) {
    auto second = second_simplification(p);
    sp.J_prime = std::move(second.J_prime);
    for (int j : second.fixed_zero) sp.fixed[j] = 0.0;
  } else {
    sp.J_prime.resize(p.n);
    for (int j = 0; j < p.n; ++j) sp.J_prime[j] = j;
  }

  if (tg.rule3) {
    // Active cells come from the original matrix (see the header note).
    auto third = third_simplification(p.A, p.m, p.n, p.b, sp.J_prime);
    sp.J_prime_i = std::move(third.J_prime_i);
    // Setting an uncapped column to 1 only helps when its cost is negative;
    // without the second rule the free set may hold nonnegative costs too.
    for (int j : third.fixed_one) {
      if (p.c[j] < 0.0) {
        sp.fixed[j] = 1.0;
        sp.J_prime.erase(std::find(sp.J_prime.begin(), sp.J_prime.end(), j));
      }
    }
  } else {
    // No row restriction: every (row, free column) cell constrains the level.
    sp.J_prime_i.assign(static_cast<std::size_t>(p.m), sp.J_prime);
  }
  return sp;
}

}  // namespace frifc
