#include "localh/linprog.hpp"

#include <stdexcept>

namespace localh {

namespace {

// Dense tableau: rows 0..m-1 are constraints, row m is the objective
// (stored negated so a positive entry marks an improving column).
struct Tableau {
  std::size_t m, n;                  // constraints, variables
  Matrix t;                          // (m+1) x (n+1); last column is rhs
  std::vector<std::size_t> basis;    // basic variable per row

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / t[row][col];
    for (auto& v : t[row]) v *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == row || t[r][col] == 0) continue;
      const Rational factor = t[r][col];
      for (std::size_t k = 0; k <= n; ++k) t[r][k] -= factor * t[row][k];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index improving column, leaving =
  // lowest-index basic variable among the minimal ratios. Terminates.
  bool optimize() {
    for (;;) {
      std::size_t enter = n;
      for (std::size_t col = 0; col < n; ++col) {
        if (t[m][col] > 0) { enter = col; break; }
      }
      if (enter == n) return true;
      std::size_t leave = m;
      Rational best_ratio(0);
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const Matrix& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp_maximize: rhs size mismatch");
  const std::size_t n = m == 0 ? c.size() : a[0].size();
  if (c.size() != n) throw std::invalid_argument("lp_maximize: objective size mismatch");

  // Phase 1: artificial variable per row, minimize their sum.
  Tableau tab;
  tab.m = m;
  tab.n = n + m;
  tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t col = 0; col < n; ++col) tab.t[r][col] = flip ? -a[r][col] : a[r][col];
    tab.t[r][n + r] = 1;
    tab.t[r][tab.n] = flip ? -b[r] : b[r];
    tab.basis[r] = n + r;
  }
  // Objective: maximize -(sum of artificials); expressed through the basis.
  for (std::size_t col = 0; col <= tab.n; ++col) {
    Rational sum(0);
    for (std::size_t r = 0; r < m; ++r) sum += tab.t[r][col];
    tab.t[m][col] = sum;
  }
  for (std::size_t r = 0; r < m; ++r) tab.t[m][n + r] = 0;
  if (!tab.optimize()) throw std::runtime_error("lp_maximize: phase 1 unbounded");
  if (tab.t[m][tab.n] != 0) return {LpStatus::Infeasible, Rational(0), {}};

  // Drive any artificial still in the basis out (degenerate rows).
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    std::size_t enter = n;
    for (std::size_t col = 0; col < n; ++col) {
      if (tab.t[r][col] != 0) { enter = col; break; }
    }
    if (enter == n) continue;  // redundant constraint row
    tab.pivot(r, enter);
  }

  // Phase 2 on the original objective, artificial columns frozen.
  for (std::size_t col = 0; col < n; ++col) tab.t[m][col] = c[col];
  for (std::size_t col = n; col < tab.n; ++col) tab.t[m][col] = 0;
  tab.t[m][tab.n] = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] >= n) continue;
    const Rational coeff = tab.t[m][tab.basis[r]];
    if (coeff == 0) continue;
    for (std::size_t k = 0; k <= tab.n; ++k) tab.t[m][k] -= coeff * tab.t[r][k];
  }
  // Never pivot an artificial back in.
  for (std::size_t col = n; col < tab.n; ++col) {
    if (tab.t[m][col] > 0) tab.t[m][col] = 0;
  }
  if (!tab.optimize()) return {LpStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> solution(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) solution[tab.basis[r]] = tab.t[r][tab.n];
  }
  Rational objective(0);
  for (std::size_t col = 0; col < n; ++col) objective += c[col] * solution[col];
  return {LpStatus::Optimal, objective, std::move(solution)};
}

}  // namespace localh
