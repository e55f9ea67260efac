#include <doctest.h>

#include <toricsolve/resultant.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace toricsolve;

namespace {

const std::vector<std::string> kX{"x"};

SparsePoly X(const std::string& s) { return parse_poly(s, kX); }

UniPoly random_uni(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> deg(lo, hi), coef(-6, 6);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

// Product formula oracle: res(f, g) = lc(f)^deg g * prod g(r) over roots r of f,
// evaluated for f with known integer roots.
Rat res_by_roots(const Int& lc, const std::vector<Int>& roots, const UniPoly& g) {
  Rat r = 1;
  for (long i = 0; i < g.degree(); ++i) r *= lc;
  for (const auto& a : roots) r *= g.eval(a);
  return r;
}

}  // namespace

TEST_CASE("sylvester_resultant examples") {
  CHECK(sylvester_resultant(X("x^2-1"), X("x-1"), "x").is_zero());
  CHECK(sylvester_resultant(X("x^2-1"), X("x-2"), "x") == X("3"));
  CHECK(sylvester_resultant(X("x^2+1"), X("x^2+1"), "x").is_zero());
  CHECK_THROWS_AS(sylvester_resultant(X("3"), X("5"), "x"), InputError);
  CHECK(resultant(UniPoly::from_ints({-1, 0, 1}), UniPoly::from_ints({-2, 1})) == 3);
}

TEST_CASE("sylvester_resultant in several variables") {
  const std::vector<std::string> v{"x", "y"};
  // res_x(x - y, x^2 - 2) = y^2 - 2
  const auto r = sylvester_resultant(parse_poly("x - y", v), parse_poly("x^2 - 2", v), "x");
  CHECK(r == parse_poly("y^2 - 2", v));
  // evaluation commutes with elimination when leading coefficients survive
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int i = 0; i < 30; ++i) {
    SparsePoly f(v), g(v);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        f.add_term({a, b}, c(rng));
        g.add_term({a, b}, c(rng));
      }
    f.add_term({3, 0}, 1);
    const auto R = sylvester_resultant(f, g, "x");
    for (int y = -3; y <= 3; ++y) {
      const auto fy = f.substitute(1, y), gy = g.substitute(1, y);
      std::vector<Rat> fc(4, Rat(0)), gc(static_cast<std::size_t>(g.degree_in(0)) + 1, Rat(0));
      for (const auto& [e, k] : fy.terms()) fc[static_cast<std::size_t>(e[0])] += k;
      for (const auto& [e, k] : gy.terms()) gc[static_cast<std::size_t>(e[0])] += k;
      const Rat direct = det_rational(sylvester_matrix(fc, gc));
      std::vector<Int> pt{0, y};
      CHECK(Rat(R.eval(pt)) == direct);
    }
  }
}

TEST_CASE("resultant agrees with the root product formula") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> root(-5, 5), lc(1, 4);
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> roots;
    const Int a = lc(rng);
    UniPoly f = UniPoly::constant(a);
    for (int k = 0; k < 1 + i % 4; ++k) {
      roots.push_back(root(rng));
      f = f * UniPoly::linear_root(roots.back());
    }
    const auto g = random_uni(rng, 1, 4);
    CHECK(resultant(f, g) == res_by_roots(a, roots, g));
  }
}

TEST_CASE("resultant multiplicativity and vanishing") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto f1 = random_uni(rng, 1, 3), f2 = random_uni(rng, 1, 3), g = random_uni(rng, 1, 3);
    CHECK(resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g));
    const auto common = random_uni(rng, 1, 2);
    const bool planted = i % 2 == 0;
    const auto a = planted ? f1 * common : f1;
    const auto b = planted ? f2 * common : f2;
    CHECK((resultant(a, b) == 0) == (uni_gcd(a, b).degree() > 0));
  }
}

TEST_CASE("first_subresultant") {
  auto r = first_subresultant(UniPoly::from_ints({2, -3, 1}), UniPoly::from_ints({3, -4, 1}));
  CHECK(r.R0 == 1);
  CHECK(r.R1 == -1);
  // identical inputs: the 2x3 matrix has equal rows, both minors vanish
  r = first_subresultant(UniPoly::from_ints({-1, 0, 1}), UniPoly::from_ints({-1, 0, 1}));
  CHECK(r.R0 == 0);
  CHECK(r.R1 == 0);
  // proportional to the degree-1 Euclidean remainder
  const auto f = UniPoly::from_ints({1, 0, 1}), g = UniPoly::from_ints({1, 1, 1});
  r = first_subresultant(f, g);
  const auto rem = f % g;
  CHECK(rem.degree() == 1);
  CHECK(r.R0 * rem.coeff(1) == r.R1 * rem.coeff(0));
  CHECK_THROWS_AS(first_subresultant(UniPoly::from_ints({1, 1}), g), InputError);
  CHECK(first_subresultant_matrix(f, g).size() == 2);
  CHECK(first_subresultant_matrix(f, g).front().size() == 3);
}

TEST_CASE("first_subresultant vanishes at the common root") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int i = 0; i < 60; ++i) {
    const Rat z = root(rng);
    const auto f = random_uni(rng, 1, 3) * UniPoly::linear_root(z);
    const auto g = random_uni(rng, 1, 3) * UniPoly::linear_root(z);
    if (f.degree() < 2 || g.degree() < 2 || uni_gcd(f, g).degree() != 1) continue;
    const auto r = first_subresultant(f, g);
    // the literal column deletion makes R1 + R0 t vanish at the common root;
    // it is the subresultant of the reversed polynomials, degenerate at 0
    if (z == 0) {
      CHECK(r.R0 == 0);
      continue;
    }
    REQUIRE(r.R0 != 0);
    CHECK(-r.R1 / r.R0 == z);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(UniPoly::from_ints({-1, 0, 1})) == 4);
  CHECK(discriminant(UniPoly::from_ints({1, 0, 1})) == -4);
  CHECK(discriminant(UniPoly::from_ints({1, -2, 1})) == 0);
  CHECK_THROWS_AS(discriminant(UniPoly::from_ints({1, 1})), InputError);
  // quadratic oracle b^2 - 4ac and cubic oracle for monic x^3 + px + q
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 50; ++i) {
    const int a = c(rng) == 0 ? 1 : c(rng) | 1, b = c(rng), cc = c(rng);
    CHECK(discriminant(UniPoly::from_ints({cc, b, a})) == Rat(b * b - 4 * a * cc));
    const int p = c(rng), q = c(rng);
    CHECK(discriminant(UniPoly::from_ints({q, p, 0, 1})) == Rat(-4 * p * p * p - 27 * q * q));
  }
  for (int i = 0; i < 50; ++i) {
    const auto f = random_uni(rng, 2, 5);
    if (f.degree() < 2) continue;
    CHECK((discriminant(f) == 0) == (square_free_part(f).degree() != f.degree()));
  }
}

TEST_CASE("cascade_unired small examples") {
  const std::vector<std::string> xy{"x", "y"};
  auto r = cascade_unired(parse_system({"x + y - 3", "x - y - 1"}, xy), parse_poly("u - x", {"x", "y", "u"}));
  CHECK(r.P == UniPoly::from_ints({-2, 1}));
  r = cascade_unired(parse_system({"x^2 - 2"}, kX), parse_poly("u - x", {"x", "u"}));
  CHECK(r.P == UniPoly::from_ints({-2, 0, 1}));
  CHECK_THROWS_AS(cascade_unired(parse_system({"x^2 - 2"}, kX), parse_poly("u - 3", {"x", "u"})), InputError);
  CHECK_THROWS_AS(cascade_unired(parse_system({"x - 1", "x - 2"}, kX), parse_poly("u - x", {"x", "u"})),
                  InputError);
}

TEST_CASE("cascade_unired root containment on planted systems") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 2), num(-3, 3), den(1, 3);
  const std::vector<std::string> xy{"x", "y"};
  int ok = 0;
  for (int i = 0; i < 40 && ok < 30; ++i) {
    Rat zx(num(rng), den(rng)), zy(num(rng), den(rng));
    zx.canonicalize();
    zy.canonicalize();
    std::vector<SparsePoly> polys;
    for (int k = 0; k < 2; ++k) {
      SparsePoly g(xy);
      for (int t = 0; t < 3; ++t) g.add_term({ex(rng), ex(rng)}, coef(rng));
      g.add_term({1 + k, 1 - k}, 1);
      const std::vector<Rat> pt{zx, zy};
      const Rat v = g.eval(pt);
      // den*g - num vanishes at the planted point
      SparsePoly f = g * Int(v.get_den());
      f.add_term({0, 0}, -v.get_num());
      polys.push_back(f);
    }
    if (polys[0].is_constant() || polys[1].is_constant()) continue;
    const SparsePoly proj = parse_poly(i % 2 ? "u - x - 2*y" : "u - x*y", {"x", "y", "u"});
    try {
      const auto r = cascade_unired(PolySystem(xy, polys), proj);
      const Rat image = i % 2 ? Rat(zx + 2 * zy) : Rat(zx * zy);
      CHECK(r.sound().eval(image) == 0);
      if (image != 0) CHECK(r.P.eval(image) == 0);
      ++ok;
    } catch (const DegenerateError&) {
      // shared component; no univariate reduction by this cascade
    }
  }
  CHECK(ok >= 25);
}

TEST_CASE("strip_extraneous") {
  const std::vector<std::string> v{"y", "u"};
  // (u^2+1) * u^3 * 6 * (y - u)
  const auto f = parse_poly("6*u^3*(u^2+1)*(y-u)", v);
  CHECK(strip_extraneous(f, 1) == parse_poly("y - u", v));
}
