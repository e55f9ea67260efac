#include <doctest.h>

#include <toricsolve/polytope.hpp>
#include <toricsolve/resultant.hpp>
#include <toricsolve/toric.hpp>

#include <random>

using namespace toricsolve;

namespace {

std::vector<std::vector<Int>> random_coeffs(const ResultantMatrix& M, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-20, 20);
  std::vector<std::vector<Int>> out;
  for (const auto& s : M.supports) {
    out.emplace_back();
    for (std::size_t k = 0; k < s.size(); ++k) {
      int v = c(rng);
      out.back().push_back(v == 0 ? 1 : v);
    }
  }
  return out;
}

Int toric_det(const ResultantMatrix& M, const std::vector<std::vector<Int>>& c) {
  return det_bareiss(M.instantiate<Int>(c, Int(0)));
}

UniPoly uni_from(const Support& s, const std::vector<Int>& c) {
  std::vector<Rat> v;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto e = static_cast<std::size_t>(s[k][0]);
    if (v.size() <= e) v.resize(e + 1, Rat(0));
    v[e] = c[k];
  }
  return UniPoly(v);
}

Support simplex(std::size_t n, std::int64_t d = 1) {
  Support s;
  Exponents e(n, 0);
  for (;;) {
    std::int64_t t = 0;
    for (auto v : e) t += v;
    if (t <= d) s.push_back(e);
    std::size_t j = 0;
    while (j < n && ++e[j] > d) e[j++] = 0;
    if (j == n) break;
  }
  return s;
}

}  // namespace

TEST_CASE("univariate toric matrix is the Sylvester layout") {
  const auto M = toric_matrix({{{0}, {1}, {2}}, {{0}, {1}}});
  CHECK(M.size() == 3);
  CHECK(M.rows_of(0) == 1);
  CHECK(M.rows_of(1) == 2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_coeffs(M, rng);
    const Rat r = resultant(uni_from(M.supports[0], c[0]), uni_from(M.supports[1], c[1]));
    CHECK(abs(Rat(toric_det(M, c))) == abs(r));
  }
}

TEST_CASE("gapped univariate support gives a multiple of the resultant") {
  const auto M = toric_matrix({{{0}, {2}}, {{0}, {1}}});
  CHECK(M.size() <= 4);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_coeffs(M, rng);
    const Rat r = resultant(uni_from(M.supports[0], c[0]), uni_from(M.supports[1], c[1]));
    const Int d = toric_det(M, c);
    REQUIRE(r != 0);
    CHECK(d != 0);
    CHECK(Rat(Rat(d) / r).get_den() == 1);
  }
  // a*x^2 + b with a common root x = 1 of c*x + d: determinant vanishes
  CHECK(toric_det(M, {{-3, 3}, {-5, 5}}) == 0);
}

TEST_CASE("three linear forms give the coefficient determinant") {
  const auto M = toric_matrix({simplex(2), simplex(2), simplex(2)});
  CHECK(M.size() == 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_coeffs(M, rng);
    Matrix<Int> plain(3, std::vector<Int>(3));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t k = 0; k < 3; ++k) plain[r][k] = c[r][k];
    CHECK(abs_int(toric_det(M, c)) == abs_int(det_bareiss(plain)));
  }
}

TEST_CASE("toric matrix rows, generic nonsingularity and planted roots") {
  std::mt19937_64 rng(4);
  const std::vector<std::vector<Support>> families{
      {simplex(2), simplex(2, 2), simplex(2, 2)},
      {simplex(2), {{0, 0}, {1, 1}, {2, 0}, {0, 2}}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
      {simplex(3), simplex(3, 2), simplex(3), simplex(3, 2)},
  };
  for (const auto& A : families) {
    const auto M = toric_matrix(A);
    const std::size_t n = A.size() - 1;
    // the first polynomial's row count is its degree in the resultant
    std::vector<LatticePolytope> rest;
    for (std::size_t i = 1; i < A.size(); ++i) rest.emplace_back(n, A[i]);
    CHECK(Int(static_cast<long>(M.rows_of(0))) == mixed_volume(rest));
    std::size_t lattice = 0;
    Support sum{Exponents(n, 0)};
    for (const auto& s : A) {
      Support next;
      for (const auto& p : sum)
        for (const auto& a : s) {
          Exponents q(n);
          for (std::size_t j = 0; j < n; ++j) q[j] = p[j] + a[j];
          next.push_back(q);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sum = next;
    }
    lattice = lattice_points(LatticePolytope(n, sum)).size();
    CHECK(M.size() <= lattice);
    for (int t = 0; t < 5; ++t) {
      auto c = random_coeffs(M, rng);
      CHECK(toric_det(M, c) != 0);
      // common root (1, ..., 1): make every coefficient vector sum to zero
      for (auto& v : c) {
        Int s = 0;
        for (std::size_t k = 1; k < v.size(); ++k) s += v[k];
        v[0] = -s;
      }
      CHECK(toric_det(M, c) == 0);
    }
  }
}

TEST_CASE("toric_matrix degenerate families") {
  CHECK_THROWS_AS(toric_matrix({{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}, {{0, 0}, {1, 0}}}), DegenerateError);
  CHECK_THROWS_AS(toric_matrix({{{0}}}), InputError);
  CHECK_THROWS_AS(toric_matrix({{{0}, {1}}, {}}), InputError);
}

TEST_CASE("lowest_order_det against exact interpolation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  const modp::u64 p = modp::large_primes(1)[0];
  for (int t = 0; t < 40; ++t) {
    const std::size_t N = 2 + t % 5;
    // low-rank M0 so that the valuation is positive
    Matrix<Int> M0(N, std::vector<Int>(N, Int(0))), M1(N, std::vector<Int>(N, Int(0)));
    const std::size_t rank = static_cast<std::size_t>(t) % N;
    for (std::size_t k = 0; k < rank; ++k) {
      std::vector<int> a(N), b(N);
      for (auto& v : a) v = c(rng);
      for (auto& v : b) v = c(rng);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) M0[i][j] += a[i] * b[j];
    }
    for (auto& row : M1)
      for (auto& v : row) v = c(rng);
    // exact det(M0 + s M1) by evaluation at s = 0..N
    std::vector<Rat> ys;
    for (std::size_t s = 0; s <= N; ++s) {
      Matrix<Int> A = M0;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) A[i][j] += M1[i][j] * Int(static_cast<long>(s));
      ys.push_back(det_bareiss(A));
    }
    std::vector<Rat> d = ys;
    for (std::size_t k = 1; k <= N; ++k)
      for (std::size_t i = N; i >= k; --i) d[i] = (d[i] - d[i - 1]) / Rat(static_cast<long>(k));
    UniPoly poly = UniPoly::constant(d[N]);
    for (std::size_t i = N; i-- > 0;) poly = poly * UniPoly::linear_root(Rat(static_cast<long>(i))) + UniPoly::constant(d[i]);
    Matrix<modp::u64> m0(N, std::vector<modp::u64>(N)), m1 = m0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        m0[i][j] = modp::from_int(M0[i][j], p);
        m1[i][j] = modp::from_int(M1[i][j], p);
      }
    const auto [v, lc] = lowest_order_det(m0, m1, p, N);
    if (poly.is_zero()) {
      CHECK(v == std::numeric_limits<std::size_t>::max());
      continue;
    }
    std::size_t low = 0;
    while (poly.coeff(low) == 0) ++low;
    CHECK(v == low);
    CHECK(lc == modp::from_int(poly.coeff(low).get_num(), p));
  }
}

TEST_CASE("pert examples") {
  const std::vector<std::string> x{"x"}, xy{"x", "y"};
  auto r = pert(parse_system({"x^2-1"}, x), parse_system({"x^2+x+1"}, x), {Int(1)});
  CHECK(r.h.primitive() == UniPoly::from_ints({-1, 0, 1}));
  r = pert(parse_system({"x-3"}, x), parse_system({"x+1"}, x), {Int(1)});
  CHECK(r.h.primitive() == UniPoly::from_ints({-3, 1}));
  r = pert(parse_system({"x^2-2", "y-1"}, xy), parse_system({"1+x+y+x^2", "1+x+y+x^2"}, xy), {Int(1), Int(2)});
  CHECK(r.h.primitive() == UniPoly::from_ints({2, -4, 1}));
  CHECK(r.last_rows == 2);
  // positive-dimensional input: Pert still exists once the deformation is generic
  r = pert(parse_system({"x*y-x", "x*y-x"}, xy), parse_system({"1+2*x+3*y+5*x*y", "2+x+7*y+x*y"}, xy),
           {Int(1), Int(3)});
  CHECK(r.s_order > 0);
  CHECK(r.h.degree() >= 1);
  CHECK_THROWS_AS(pert(parse_system({"x-1"}, xy), parse_system({"x+1"}, xy), {Int(1), Int(1)}), InputError);
}
