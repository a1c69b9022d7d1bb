#pragma once

#include <optional>
#include <vector>

#include "localh/geometry.hpp"
#include "localh/rational.hpp"

namespace localh {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rational objective;               // valid when status == Optimal
  std::vector<Rational> solution;   // valid when status == Optimal
};

/// Exact two-phase simplex with Bland's rule:
/// maximize c.x subject to A x = b, x >= 0.
LpResult lp_maximize(const Matrix& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

}  // namespace localh
