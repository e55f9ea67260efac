#include <toricsolve/lp.hpp>

#include <optional>

namespace toricsolve {

namespace {

struct Tableau {
  Matrix<Rat> t;  // rows 0..m-1 constraints, last column rhs
  std::vector<Rat> obj;  // reduced costs, last entry = -objective
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of variables

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rat f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    if (obj[c] != 0) {
      const Rat f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) obj[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  void set_objective(const std::vector<Rat>& c) {
    obj.assign(cols + 1, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rat f = obj[basis[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[i][j];
    }
  }

  // Returns false if unbounded. `allowed` limits entering columns.
  bool run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][*enter] <= 0) continue;
        const Rat ratio = t[i][cols] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const Matrix<Rat>& A, const std::vector<Rat>& b, const std::vector<Rat>& c) {
  const std::size_t m = A.size();
  const std::size_t N = c.size();
  if (b.size() != m) throw InputError("LP dimensions disagree");
  Tableau T;
  T.cols = N + m;
  T.t.assign(m, std::vector<Rat>(T.cols + 1, Rat(0)));
  T.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != N) throw InputError("LP dimensions disagree");
    const bool neg = b[i] < 0;
    for (std::size_t j = 0; j < N; ++j) T.t[i][j] = neg ? Rat(-A[i][j]) : A[i][j];
    T.t[i][N + i] = 1;
    T.t[i][T.cols] = neg ? Rat(-b[i]) : b[i];
    T.basis[i] = N + i;
  }
  // Phase 1: minimize the sum of artificial variables.
  std::vector<Rat> phase1(T.cols, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1[N + i] = 1;
  T.set_objective(phase1);
  T.run(T.cols);
  LpResult res;
  if (-T.obj[T.cols] != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < T.t.size();) {
    if (T.basis[i] < N) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < N; ++j)
      if (T.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      T.pivot(i, *col);
      ++i;
    } else {
      T.t.erase(T.t.begin() + static_cast<std::ptrdiff_t>(i));
      T.basis.erase(T.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  T.set_objective(c);
  if (!T.run(N)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(N, Rat(0));
  for (std::size_t i = 0; i < T.t.size(); ++i) res.x[T.basis[i]] = T.t[i][T.cols];
  res.objective = 0;
  for (std::size_t j = 0; j < N; ++j) res.objective += c[j] * res.x[j];
  return res;
}

bool in_convex_hull(const std::vector<std::vector<Rat>>& points, const std::vector<Rat>& q) {
  if (points.empty()) return false;
  const std::size_t d = q.size(), N = points.size();
  Matrix<Rat> A(d + 1, std::vector<Rat>(N, Rat(0)));
  std::vector<Rat> b(d + 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < N; ++j) A[k][j] = points[j][k];
    b[k] = q[k];
  }
  for (std::size_t j = 0; j < N; ++j) A[d][j] = 1;
  b[d] = 1;
  return lp_minimize(A, b, std::vector<Rat>(N, Rat(0))).status == LpStatus::Optimal;
}

}  // namespace toricsolve
