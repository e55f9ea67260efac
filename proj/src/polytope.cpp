#include <toricsolve/polytope.hpp>

#include <toricsolve/linalg.hpp>
#include <toricsolve/lp.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace toricsolve {

namespace {

// Incremental row-echelon basis over Q for rank tests.
class RankBasis {
 public:
  explicit RankBasis(std::size_t dim) : dim_(dim) {}
  std::size_t rank() const { return rows_.size(); }
  bool add(const std::vector<Rat>& v0) {
    std::vector<Rat> v = v0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (v[c] == 0) continue;
      const Rat f = v[c];
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
    std::size_t c = 0;
    while (c < dim_ && v[c] == 0) ++c;
    if (c == dim_) return false;
    const Rat p = v[c];
    for (auto& x : v) x /= p;
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

 private:
  std::size_t dim_;
  Matrix<Rat> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rat> to_rat(const Point& p) { return {p.begin(), p.end()}; }

std::vector<Rat> diff(const Point& a, const Point& b) {
  std::vector<Rat> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = Rat(a[i] - b[i]);
  return d;
}

Int dot(const std::vector<Int>& w, const Point& p) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

struct BoundaryFacet {
  std::vector<std::size_t> idx;  // sorted indices into the point list
  std::vector<Int> w;           // cofactor normal, outward
  Int b;                        // w . q for q on the facet
};

// Generalized cross product of the facet's edge vectors.
BoundaryFacet make_facet(const std::vector<Point>& pts, std::vector<std::size_t> idx, const std::vector<Int>& sum,
                         const Int& count) {
  std::sort(idx.begin(), idx.end());
  const std::size_t n = pts[idx[0]].size();
  const Point& q0 = pts[idx[0]];
  Matrix<Int> rows(n - 1, std::vector<Int>(n));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rows[i - 1][k] = pts[idx[i]][k] - q0[k];
  BoundaryFacet f;
  f.idx = std::move(idx);
  f.w.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Int> minor(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      minor[i] = rows[i];
      minor[i].erase(minor[i].begin() + static_cast<std::ptrdiff_t>(k));
    }
    const Int d = det_bareiss(std::move(minor));
    f.w[k] = (k % 2 == 0) ? d : Int(-d);
  }
  f.b = dot(f.w, q0);
  // Orient away from the interior point sum/count.
  Int s = 0;
  for (std::size_t k = 0; k < n; ++k) s += f.w[k] * sum[k];
  if (s > count * f.b) {
    for (auto& x : f.w) x = -x;
    f.b = -f.b;
  }
  return f;
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Point> points) : dim_(dim) {
  for (const auto& p : points)
    if (p.size() != dim) throw InputError("point dimension differs from the ambient dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return;
  if (dim == 0) {
    vertices_ = points;
    full_ = true;
    nvol_ = 1;
    return;
  }

  // Initial simplex: greedily extend an affinely independent set.
  RankBasis basis(dim);
  std::vector<std::size_t> simplex{0};
  for (std::size_t i = 1; i < points.size() && simplex.size() <= dim; ++i)
    if (basis.add(diff(points[i], points[0]))) simplex.push_back(i);

  if (simplex.size() <= dim) {
    // Lower-dimensional: extreme points by linear programming.
    std::vector<std::vector<Rat>> rp;
    for (const auto& p : points) rp.push_back(to_rat(p));
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<std::vector<Rat>> others;
      for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) others.push_back(rp[j]);
      if (others.empty() || !in_convex_hull(others, rp[i])) vertices_.push_back(points[i]);
    }
    return;
  }

  full_ = true;
  std::vector<Int> sum(dim, Int(0));
  for (auto i : simplex)
    for (std::size_t k = 0; k < dim; ++k) sum[k] += points[i][k];
  const Int count = static_cast<long>(dim + 1);

  {
    Matrix<Int> m(dim, std::vector<Int>(dim));
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) m[i - 1][k] = points[simplex[i]][k] - points[simplex[0]][k];
    nvol_ = abs_int(det_bareiss(std::move(m)));
  }

  std::vector<BoundaryFacet> boundary;
  for (std::size_t skip = 0; skip <= dim; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j <= dim; ++j)
      if (j != skip) idx.push_back(simplex[j]);
    boundary.push_back(make_facet(points, idx, sum, count));
  }

  std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    if (in_simplex.count(pi)) continue;
    const Point& p = points[pi];
    std::map<std::vector<std::size_t>, int> ridge_count;
    std::vector<BoundaryFacet> kept;
    kept.reserve(boundary.size());
    std::vector<BoundaryFacet> vis;
    for (auto& f : boundary) {
      const Int h = dot(f.w, p) - f.b;
      if (h > 0) {
        nvol_ += h;
        vis.push_back(std::move(f));
      } else {
        kept.push_back(std::move(f));
      }
    }
    if (vis.empty()) {
      boundary = std::move(kept);
      continue;
    }
    for (const auto& f : vis)
      for (std::size_t drop = 0; drop < f.idx.size(); ++drop) {
        std::vector<std::size_t> ridge = f.idx;
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
        ++ridge_count[ridge];
      }
    for (const auto& [ridge, c] : ridge_count) {
      if (c != 1) continue;
      std::vector<std::size_t> idx = ridge;
      idx.push_back(pi);
      kept.push_back(make_facet(points, idx, sum, count));
    }
    boundary = std::move(kept);
  }

  // H-representation from the boundary simplices.
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for (const auto& f : boundary) {
    Int g = 0;
    for (const auto& x : f.w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<Int> w = f.w;
    for (auto& x : w) x /= g;
    Int b = f.b / g;
    if (seen.insert({w, b}).second) facets_.push_back({w, b});
  }
  for (const auto& p : points) {
    RankBasis tight(dim);
    for (const auto& f : facets_)
      if (dot(f.normal, p) == f.offset) tight.add({f.normal.begin(), f.normal.end()});
    if (tight.rank() == dim) vertices_.push_back(p);
  }
}

bool LatticePolytope::contains(const Point& p) const {
  if (p.size() != dim_) throw InputError("point dimension differs from the ambient dimension");
  if (vertices_.empty()) return false;
  if (full_) {
    for (const auto& f : facets_)
      if (dot(f.normal, p) > f.offset) return false;
    return true;
  }
  std::vector<std::vector<Rat>> rv;
  for (const auto& v : vertices_) rv.push_back(to_rat(v));
  return in_convex_hull(rv, to_rat(p));
}

Point LatticePolytope::min_corner() const {
  Point m = vertices_.front();
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::min(m[i], v[i]);
  return m;
}

Point LatticePolytope::max_corner() const {
  Point m = vertices_.front();
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], v[i]);
  return m;
}

LatticePolytope standard_simplex(std::size_t n) {
  std::vector<Point> pts{Point(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  return LatticePolytope(n, pts);
}

LatticePolytope newton_polytope(const SparsePoly& f) {
  std::vector<Point> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return LatticePolytope(f.nvars(), pts);
}

LatticePolytope newton_polytope(const PolySystem& F) {
  const std::size_t n = F.nvars();
  if (n == 0) throw InputError("Newton polytope needs at least one variable");
  std::vector<Point> pts{Point(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  for (const auto& f : F.polys())
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return LatticePolytope(n, pts);
}

std::vector<Point> lattice_points(const LatticePolytope& P, std::uint64_t cap) {
  std::vector<Point> out;
  if (P.vertices().empty()) return out;
  const std::size_t n = P.dim();
  const Point lo = P.min_corner(), hi = P.max_corner();
  Int box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= Int(hi[i] - lo[i] + 1);
  if (box > Int(static_cast<unsigned long>(cap)))
    throw CapExceeded("lattice enumeration box has " + box.get_str() + " points (cap " + std::to_string(cap) + ")");

  // Fast path: normals fitting in 64 bits, accumulated in 128 bits.
  bool small = P.full_dimensional();
  std::vector<std::vector<std::int64_t>> nrm;
  std::vector<__int128> off;
  if (small)
    for (const auto& f : P.facets()) {
      std::vector<std::int64_t> w;
      for (const auto& x : f.normal) {
        if (!x.fits_slong_p()) small = false;
        w.push_back(x.fits_slong_p() ? x.get_si() : 0);
      }
      if (!f.offset.fits_slong_p()) small = false;
      nrm.push_back(std::move(w));
      off.push_back(f.offset.fits_slong_p() ? f.offset.get_si() : 0);
    }

  Point p = lo;
  for (;;) {
    bool inside;
    if (small) {
      inside = true;
      for (std::size_t f = 0; f < nrm.size() && inside; ++f) {
        __int128 s = 0;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<__int128>(nrm[f][i]) * p[i];
        inside = s <= off[f];
      }
    } else {
      inside = P.contains(p);
    }
    if (inside) out.push_back(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

Int lattice_point_count(const LatticePolytope& P, std::uint64_t cap) {
  return Int(static_cast<unsigned long>(lattice_points(P, cap).size()));
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
  if (P.dim() != Q.dim()) throw InputError("Minkowski sum of polytopes of different dimension");
  std::vector<Point> pts;
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  return LatticePolytope(P.dim(), std::move(pts));
}

LatticePolytope scaled(const LatticePolytope& P, std::int64_t k) {
  std::vector<Point> pts = P.vertices();
  for (auto& p : pts)
    for (auto& x : p) x *= k;
  return LatticePolytope(P.dim(), std::move(pts));
}

Int mixed_volume(const std::vector<LatticePolytope>& Ps) {
  const std::size_t n = Ps.empty() ? 0 : Ps.front().dim();
  if (Ps.size() != n || n == 0) throw InputError("mixed volume needs exactly n polytopes in dimension n");
  for (const auto& P : Ps)
    if (P.dim() != n) throw InputError("mixed volume of polytopes of different dimension");
  Int total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    LatticePolytope sum;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      sum = first ? Ps[i] : minkowski_sum(sum, Ps[i]);
      first = false;
    }
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 0)
      total += sum.normalized_volume();
    else
      total -= sum.normalized_volume();
  }
  Int fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  return total / fact;
}

MBound m_bound(const PolySystem& F, mpfr_prec_t prec) {
  const std::size_t n = F.nvars();
  const auto Q = newton_polytope(F);
  MBound r;
  r.V_F = Q.normalized_volume();
  const Point lo = Q.min_corner(), hi = Q.max_corner();
  Int plus2 = 1, plus1 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Int p = Int(static_cast<long>(n)) * Int(hi[i] - lo[i]);
    r.projections.push_back(p);
    plus2 *= p + 2;
    plus1 *= p + 1;
  }
  const Interval head = Interval::exp_of(Rat(1, 8) + Rat(static_cast<long>(n)), prec) /
                        Interval(Int(static_cast<long>(n + 1)), prec).sqrt() * Interval(r.V_F, prec);
  r.value = head + Interval(Int(plus2 - plus1), prec);
  const auto stats = system_stats(F);
  r.coarse = binomial(static_cast<unsigned long>(static_cast<std::int64_t>(n) * stats.D + 1),
                      static_cast<unsigned long>(n));
  return r;
}

}  // namespace toricsolve
