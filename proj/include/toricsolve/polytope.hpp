#pragma once

#include <toricsolve/interval.hpp>
#include <toricsolve/poly.hpp>

#include <cstdint>
#include <vector>

namespace toricsolve {

using Point = std::vector<std::int64_t>;

/// Facet inequality normal . x <= offset with a primitive integer normal.
struct Facet {
  std::vector<Int> normal;
  Int offset;
};

/// Convex hull of finitely many lattice points.
///
/// Construction runs a placing triangulation in exact arithmetic, which gives
/// the vertex set, the facet inequalities (when full-dimensional) and the
/// normalized volume in one pass.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  LatticePolytope(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  /// Empty when the polytope is lower-dimensional.
  const std::vector<Facet>& facets() const { return facets_; }
  bool full_dimensional() const { return full_; }
  /// n! times the Euclidean volume.
  const Int& normalized_volume() const { return nvol_; }
  bool contains(const Point& p) const;
  /// Coordinate-wise minimum and maximum over the vertices.
  Point min_corner() const;
  Point max_corner() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  bool full_ = false;
  Int nvol_ = 0;
};

LatticePolytope standard_simplex(std::size_t n);
LatticePolytope newton_polytope(const SparsePoly& f);
/// Q_F: hull of {O, e_1, ..., e_n} and every exponent vector of F.
LatticePolytope newton_polytope(const PolySystem& F);

inline Int normalized_volume(const LatticePolytope& P) { return P.normalized_volume(); }
/// Exact count by bounding-box enumeration; throws CapExceeded above `cap` box points.
Int lattice_point_count(const LatticePolytope& P, std::uint64_t cap = 100'000'000);
/// Lattice points of P, in lexicographic order.
std::vector<Point> lattice_points(const LatticePolytope& P, std::uint64_t cap = 100'000'000);
LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);
LatticePolytope scaled(const LatticePolytope& P, std::int64_t k);
/// Normalized so that MV(P, ..., P) = normalized_volume(P).
Int mixed_volume(const std::vector<LatticePolytope>& Ps);

struct MBound {
  Interval value;             ///< e^(1/8) e^n / sqrt(n+1) V_F + prod(p_i+2) - prod(p_i+1)
  Int coarse;                 ///< C(nD+1, n)
  Int V_F;
  std::vector<Int> projections;  ///< p_i: projection length of n Q_F onto the x_i-axis
};

MBound m_bound(const PolySystem& F, mpfr_prec_t prec = Interval::kDefaultPrecision);

}  // namespace toricsolve
