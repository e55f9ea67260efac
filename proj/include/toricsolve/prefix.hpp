#pragma once

#include <toricsolve/poly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricsolve {

/// f(x, y) as a polynomial in y with coefficients in Q[x]; x is variable 0
/// and y is variable 1 of the input.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const SparsePoly& f);

struct YRoots {
  std::vector<UniPoly> roots;   ///< every g in Q[x] with (y - g) | f, with multiplicity
  YPoly cofactor;               ///< f divided by the product of (y - g)
  std::size_t failed_tracks = 0;  ///< interpolated candidates rejected by division
};

/// Polynomial roots in y found by specializing x at integer points, matching
/// rational roots across points, interpolating and verifying by division.
YRoots poly_roots_in_y(const SparsePoly& f, std::size_t combination_cap = 1'000'000);

enum class Ring { N, Z };

struct JSTReport {
  Ring ring = Ring::N;
  bool include_zero = false;
  bool trivial = false;               ///< f identically zero
  std::vector<UniPoly> roots;         ///< the f_i used by the conditions
  std::vector<UniPoly> excluded;      ///< roots with nonpositive leading coefficient (ring N)
  YPoly cofactor;
  bool condition1 = false, condition2 = true, condition3 = false;
  std::optional<Int> cond2_witness;   ///< x with no y
  std::optional<Int> cond3_witness;   ///< uncovered residue mod alpha
  Int x0 = 0;
  Int alpha = 1;
  std::vector<std::vector<Int>> g;    ///< alpha f_i, ascending coefficients
  bool verdict = false;
};

JSTReport jst_decide(const SparsePoly& f, Ring ring, bool include_zero = false);

/// For every x in [x_lo, x_hi] some y in the ring (and in y_range when given)
/// has f(x, y) = 0. For ring N, y >= 1 (y >= 0 with include_zero).
bool brute_forall_exists(const SparsePoly& f, Ring ring, std::pair<Int, Int> x_range,
                         std::optional<std::pair<Int, Int>> y_range = std::nullopt, bool include_zero = false);
/// First x in the range without a y, if any.
std::optional<Int> brute_counterexample(const SparsePoly& f, Ring ring, std::pair<Int, Int> x_range,
                                        std::optional<std::pair<Int, Int>> y_range = std::nullopt,
                                        bool include_zero = false);

}  // namespace toricsolve
