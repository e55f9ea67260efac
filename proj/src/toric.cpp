#include <toricsolve/lp.hpp>
#include <toricsolve/polytope.hpp>
#include <toricsolve/toric.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <random>

namespace toricsolve {

using modp::u64;

std::size_t ResultantMatrix::rows_of(std::size_t poly) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const MatrixRow& r) { return r.poly == poly; }));
}

Support support_of(const SparsePoly& f) {
  Support s = f.support();
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

std::vector<Point> sum_vertices(const std::vector<Support>& supports, std::size_t n) {
  std::vector<Point> acc{Point(n, 0)};
  for (const auto& A : supports) {
    std::vector<Point> next;
    const auto verts = LatticePolytope(n, A).vertices();
    for (const auto& p : acc)
      for (const auto& a : verts) {
        Point q(n);
        for (std::size_t j = 0; j < n; ++j) q[j] = p[j] + a[j];
        next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = LatticePolytope(n, next).vertices();
  }
  return acc;
}

struct Cell {
  std::vector<std::vector<std::size_t>> summands;  // indices into each support
};

std::optional<Cell> locate(const std::vector<Support>& A, const std::vector<std::vector<Rat>>& lift,
                           const std::vector<Rat>& target) {
  const std::size_t n = target.size(), N = A.size();
  std::size_t vars = 0;
  for (const auto& s : A) vars += s.size();
  Matrix<Rat> M(n + N, std::vector<Rat>(vars, Rat(0)));
  std::vector<Rat> b(n + N, Rat(1)), c(vars);
  for (std::size_t j = 0; j < n; ++j) b[j] = target[j];
  std::size_t col = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < A[i].size(); ++k, ++col) {
      for (std::size_t j = 0; j < n; ++j) M[j][col] = A[i][k][j];
      M[n + i][col] = 1;
      c[col] = lift[i][k];
    }
  const auto res = lp_minimize(M, b, c);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  Cell cell;
  cell.summands.resize(N);
  col = 0;
  std::size_t dims = 0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < A[i].size(); ++k, ++col)
      if (res.x[col] > 0) cell.summands[i].push_back(k);
    if (cell.summands[i].empty()) return std::nullopt;
    dims += cell.summands[i].size() - 1;
  }
  if (dims != n) return std::nullopt;  // lifting not generic enough
  return cell;
}

}  // namespace

ResultantMatrix toric_matrix(const std::vector<Support>& supports_in, std::uint64_t seed) {
  if (supports_in.size() < 2) throw InputError("toric_matrix needs n+1 >= 2 supports");
  const std::size_t N = supports_in.size(), n = N - 1;
  std::vector<Support> A = supports_in;
  for (auto& s : A) {
    if (s.empty()) throw InputError("empty support");
    for (const auto& a : s)
      if (a.size() != n) throw InputError("support point has the wrong dimension");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  const LatticePolytope Q(n, sum_vertices(A, n));
  if (!Q.full_dimensional()) throw DegenerateError("Minkowski sum of the supports is not full-dimensional");

  // delta_j = eps^j with eps small enough that no wall through lattice points contains p - delta
  const Point lo = Q.min_corner(), hi = Q.max_corner();
  Int W = 1;
  for (std::size_t j = 0; j < n; ++j) W = std::max(W, Int(hi[j] - lo[j]));
  Int H = 1;
  for (std::size_t j = 1; j < n; ++j) H *= W * Int(j);
  for (const auto& f : Q.facets())
    for (const auto& v : f.normal) H = std::max(H, abs_int(v));
  const Rat eps(Int(1), 2 * H + 2);
  std::vector<Rat> delta(n);
  Rat e = eps;
  for (std::size_t j = 0; j < n; ++j, e *= eps) delta[j] = e;

  // lattice points of Q + delta
  std::vector<Exponents> E;
  {
    Int box = 1;
    for (std::size_t j = 0; j < n; ++j) box *= Int(hi[j] - lo[j] + 2);
    if (box > 10'000'000) throw CapExceeded("toric matrix enumeration box too large");
    Exponents p = lo;
    for (;;) {
      bool in = true;
      for (const auto& f : Q.facets()) {
        Int t = -f.offset;
        Rat nd = 0;
        for (std::size_t j = 0; j < n; ++j) {
          t += f.normal[j] * p[j];
          nd += f.normal[j] * delta[j];
        }
        if (t > 0 || (t == 0 && nd < 0)) {
          in = false;
          break;
        }
      }
      if (in) E.push_back(p);
      std::size_t j = 0;
      while (j < n && ++p[j] > hi[j] + 1) {
        p[j] = lo[j];
        ++j;
      }
      if (j == n) break;
    }
  }
  std::sort(E.begin(), E.end());
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < E.size(); ++k) index[E[k]] = k;

  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::uniform_int_distribution<long> dist(0, (1L << 24) - 1);
    std::vector<std::vector<Rat>> lift(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < A[i].size(); ++k) lift[i].push_back(Rat(dist(rng)));

    ResultantMatrix M;
    M.kind = ResultantMatrix::Kind::Toric;
    M.supports = A;
    M.columns = E;
    M.lifting_seed = seed + attempt;
    bool ok = true;
    for (const auto& p : E) {
      std::vector<Rat> target(n);
      for (std::size_t j = 0; j < n; ++j) target[j] = Rat(p[j]) - delta[j];
      const auto cell = locate(A, lift, target);
      if (!cell) {
        ok = false;
        break;
      }
      std::size_t i = N;
      while (i-- > 0)
        if (cell->summands[i].size() == 1) break;
      const auto& a = A[i][cell->summands[i][0]];
      MatrixRow row;
      row.poly = i;
      row.shift.resize(n);
      for (std::size_t j = 0; j < n; ++j) row.shift[j] = p[j] - a[j];
      for (std::size_t k = 0; k < A[i].size(); ++k) {
        Exponents q(n);
        for (std::size_t j = 0; j < n; ++j) q[j] = row.shift[j] + A[i][k][j];
        const auto it = index.find(q);
        if (it == index.end()) {
          ok = false;
          break;
        }
        row.entries.emplace_back(it->second, k);
      }
      if (!ok) break;
      M.rows.push_back(std::move(row));
    }
    if (ok) return M;
  }
  throw DegenerateError("no generic lifting found for the toric matrix");
}

namespace {

// Valuation and lowest coefficient of det(M0 + s M1) mod (p, s^T), or nullopt when
// a zero block mod s^T leaves the answer undetermined.
std::optional<std::pair<std::size_t, u64>> series_det(const Matrix<u64>& M0, const Matrix<u64>& M1, u64 p,
                                                      std::size_t T) {
  const std::size_t N = M0.size();
  std::vector<u64> a(N * N * T, 0);
  std::vector<std::size_t> val(N * N, T);
  auto at = [&](std::size_t r, std::size_t c) { return a.data() + (r * N + c) * T; };
  auto revalue = [&](std::size_t r, std::size_t c) {
    const u64* s = at(r, c);
    std::size_t v = 0;
    while (v < T && s[v] == 0) ++v;
    val[r * N + c] = v;
  };
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      at(r, c)[0] = M0[r][c];
      at(r, c)[1] = M1[r][c];
      revalue(r, c);
    }
  std::vector<std::size_t> ri(N), ci(N);
  for (std::size_t k = 0; k < N; ++k) ri[k] = ci[k] = k;
  bool neg = false;
  std::size_t total = 0;
  u64 lc = 1;
  std::vector<u64> inv(T), q(T);
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t bi = k, bj = k, best = T + 1;
    for (std::size_t i = k; i < N && best > 0; ++i)
      for (std::size_t j = k; j < N; ++j) {
        const std::size_t v = val[ri[i] * N + ci[j]];
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best >= T) return std::nullopt;
    if (bi != k) {
      std::swap(ri[k], ri[bi]);
      neg = !neg;
    }
    if (bj != k) {
      std::swap(ci[k], ci[bj]);
      neg = !neg;
    }
    const std::size_t v = best, L = T - v, pr = ri[k], pc = ci[k];
    const u64* P = at(pr, pc) + v;
    total += v;
    lc = modp::mul(lc, P[0], p);
    inv[0] = modp::inv(P[0], p);
    for (std::size_t m = 1; m < L; ++m) {
      u64 acc = 0;
      for (std::size_t t = 1; t <= m; ++t)
        if (P[t]) acc = modp::add(acc, modp::mul(P[t], inv[m - t], p), p);
      inv[m] = modp::sub(0, modp::mul(inv[0], acc, p), p);
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      const std::size_t r = ri[i];
      if (val[r * N + pc] >= T) continue;
      const u64* R = at(r, pc) + v;
      for (std::size_t m = 0; m < L; ++m) {
        u64 acc = 0;
        for (std::size_t t = 0; t <= m; ++t)
          if (R[t] && inv[m - t]) acc = modp::add(acc, modp::mul(R[t], inv[m - t], p), p);
        q[m] = acc;
      }
      for (std::size_t j = k + 1; j < N; ++j) {
        const std::size_t c = ci[j];
        const std::size_t bv = val[pr * N + c];
        if (bv >= T) continue;
        const u64* B = at(pr, c) + v;
        u64* D = at(r, c) + v;
        // D -= q * B mod s^L, with B starting at offset bv - v
        for (std::size_t t = bv - v; t < L; ++t) {
          if (!B[t]) continue;
          for (std::size_t m = 0; m + t < L; ++m)
            if (q[m]) D[m + t] = modp::sub(D[m + t], modp::mul(q[m], B[t], p), p);
        }
        revalue(r, c);
      }
      std::fill(at(r, pc), at(r, pc) + T, 0);
      val[r * N + pc] = T;
    }
  }
  return std::make_pair(total, neg ? modp::sub(0, lc, p) : lc);
}

}  // namespace

std::pair<std::size_t, u64> lowest_order_det(const Matrix<u64>& M0, const Matrix<u64>& M1, u64 p,
                                             std::size_t degree_bound) {
  if (M0.empty()) return {0, 1};
  for (std::size_t T = 4;; T *= 2) {
    if (auto r = series_det(M0, M1, p, T)) return *r;
    if (T > degree_bound) return {std::numeric_limits<std::size_t>::max(), 0};
  }
}

PertOperator::PertOperator(const PolySystem& F, const PolySystem& Fstar, std::uint64_t seed) {
  n_ = F.nvars();
  if (F.size() != n_ || Fstar.size() != n_) throw InputError("pert needs a square system and filling system");
  if (Fstar.vars() != F.vars()) throw InputError("F and F* must share variables");
  // the linear form goes first: its row count is then exactly its degree in Res,
  // so the extraneous factor does not involve u0 or u
  Support simplex{Exponents(n_, 0)};
  for (std::size_t j = 0; j < n_; ++j) {
    Exponents e(n_, 0);
    e[j] = 1;
    simplex.push_back(e);
  }
  std::vector<Support> A{simplex};
  for (std::size_t i = 0; i < n_; ++i) {
    Support s = support_of(F[i]);
    const Support t = support_of(Fstar[i]);
    s.insert(s.end(), t.begin(), t.end());
    A.push_back(std::move(s));
  }
  M_ = toric_matrix(A, seed);
  c_.resize(n_);
  cstar_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (const auto& a : M_.supports[i + 1]) {
      c_[i].push_back(F[i].coefficient(a));
      cstar_[i].push_back(Fstar[i].coefficient(a));
    }
}

PertResult PertOperator::operator()(const std::vector<Int>& u) const {
  if (u.size() != n_) throw InputError("pert weight vector has the wrong length");
  const std::size_t N = M_.size();
  const auto& last = M_.supports[0];
  // Hadamard bound on |det| over |s| = |u0| = 1 bounds every coefficient
  std::size_t bits = 2;
  for (const auto& row : M_.rows) {
    Int sq = 0;
    for (const auto& [col, k] : row.entries) {
      if (row.poly > 0) {
        const Int e = abs_int(c_[row.poly - 1][k]) + abs_int(cstar_[row.poly - 1][k]);
        sq += e * e;
      } else {
        const auto& a = last[k];
        const auto j = std::find(a.begin(), a.end(), 1);
        const Int e = j == a.end() ? Int(1) : u[static_cast<std::size_t>(j - a.begin())];
        sq += e * e;
      }
    }
    bits += (bit_length(sq) + 1) / 2;
  }
  const std::size_t D = M_.rows_of(0), sdeg = N - D;

  PertResult out;
  out.matrix_size = N;
  out.last_rows = D;
  std::optional<std::size_t> order;
  CrtAccumulator crt;
  std::size_t zero_primes = 0, used = 0;
  std::vector<u64> xs(D + 1);
  for (std::size_t k = 0; k <= D; ++k) xs[k] = k;
  for (std::size_t pi = 0;; ++pi) {
    const u64 p = modp::large_primes(pi + 1)[pi];
    std::vector<std::vector<u64>> cp(n_ + 1), cs(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < c_[i].size(); ++k) {
        cp[i + 1].push_back(modp::from_int(c_[i][k], p));
        cs[i + 1].push_back(modp::sub(0, modp::from_int(cstar_[i][k], p), p));
      }
    cs[0].assign(last.size(), 0);
    std::vector<std::pair<std::size_t, u64>> pts;
    for (std::size_t x = 0; x <= D; ++x) {
      cp[0].clear();
      for (const auto& a : last) {
        const auto j = std::find(a.begin(), a.end(), 1);
        cp[0].push_back(j == a.end() ? modp::sub(0, x % p, p)
                                      : modp::from_int(u[static_cast<std::size_t>(j - a.begin())], p));
      }
      pts.push_back(lowest_order_det(M_.instantiate<u64>(cp, 0), M_.instantiate<u64>(cs, 0), p, sdeg));
    }
    std::size_t kp = std::numeric_limits<std::size_t>::max();
    for (const auto& [v, c] : pts) kp = std::min(kp, v);
    if (kp == std::numeric_limits<std::size_t>::max()) {
      if (++zero_primes >= 2) throw DegenerateError("toric matrix determinant vanishes identically");
      continue;
    }
    if (order && kp > *order) continue;  // unlucky prime
    if (!order || kp < *order) {
      order = kp;
      crt = CrtAccumulator();
      used = 0;
    }
    std::vector<u64> ys;
    for (const auto& [v, c] : pts) ys.push_back(v == kp ? c : 0);
    crt.add(modp::interpolate(xs, ys, p), p);
    ++used;
    if (bit_length(crt.modulus()) > bits + 1) break;
  }
  out.s_order = *order;
  out.primes = used;
  out.coefficients = crt.symmetric();
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  out.h = UniPoly::from_ints(out.coefficients);
  return out;
}

PertResult pert(const PolySystem& F, const PolySystem& Fstar, const std::vector<Int>& u) {
  return PertOperator(F, Fstar)(u);
}

}  // namespace toricsolve
