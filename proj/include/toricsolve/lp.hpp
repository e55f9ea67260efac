#pragma once

#include <toricsolve/linalg.hpp>

#include <vector>

namespace toricsolve {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> x;
  Rat objective;
};

/// min c.x subject to A x = b, x >= 0, by the two-phase simplex method with
/// Bland's rule over exact rationals.
LpResult lp_minimize(const Matrix<Rat>& A, const std::vector<Rat>& b, const std::vector<Rat>& c);

/// Whether q lies in the convex hull of the given points (exact).
bool in_convex_hull(const std::vector<std::vector<Rat>>& points, const std::vector<Rat>& q);

}  // namespace toricsolve
