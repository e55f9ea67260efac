#include <doctest.h>

#include <toricsolve/poly.hpp>

#include <random>
#include <set>

using namespace toricsolve;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kX{"x"};

SparsePoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> nterms(0, 6), exp(0, 4), coef(-50, 50);
  SparsePoly p(vars);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents e(vars.size());
    for (auto& v : e) v = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

UniPoly random_uni(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

}  // namespace

TEST_CASE("parse_poly examples") {
  const auto f = parse_poly("144 + 2*x - 3*y^2 + x^7*y^8*z^9", kXYZ);
  CHECK(f.size() == 4);
  CHECK(f.total_degree() == 24);
  CHECK(f.coefficient({0, 2, 0}) == -3);
  CHECK(parse_poly("0", kXYZ).is_zero());
  CHECK(parse_poly("x - x", kXYZ).is_zero());
  CHECK(parse_poly("(2*y - x)*(2*y - x - 1)", kXYZ) == parse_poly("4*y^2 - 4*x*y - 2*y + x^2 + x", kXYZ));
}

TEST_CASE("parse_poly errors") {
  CHECK_THROWS_AS(parse_poly("x + w", kXYZ), InputError);
  CHECK_THROWS_AS(parse_poly("x^-1", kXYZ), InputError);
  CHECK_THROWS_AS(parse_poly("x + * y", kXYZ), InputError);
  CHECK_THROWS_AS(parse_poly("(x + y", kXYZ), InputError);
  try {
    parse_poly("x + $", kXYZ);
    FAIL("expected a syntax error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_poly(rng, kXYZ);
    const auto q = parse_poly(p.to_string(), kXYZ);
    REQUIRE(p == q);
    CHECK(q.to_string() == p.to_string());
  }
}

TEST_CASE("system_stats") {
  const auto F = parse_system({"144+2*x-3*y^2+x^7*y^8*z^9", "-51+5*x^2-27*z+x^9*y^7*z^8",
                               "7-6*x+8*x^8*y^9*z^7-12*x^8*y^8*z^7"},
                              kXYZ);
  auto s = system_stats(F);
  CHECK(s.n == 3);
  CHECK(s.m == 3);
  CHECK(s.D == 24);
  CHECK(s.k == 12);
  CHECK(s.c_max == 144);

  s = system_stats(parse_system({"x", "x - 1"}, kX));
  CHECK(s.n == 1);
  CHECK(s.m == 2);
  CHECK(s.D == 1);
  CHECK(s.k == 3);
  CHECK(s.c_max == 1);

  s = system_stats(PolySystem({"x", "y"}, {}));
  CHECK(s.m == 0);
  CHECK(s.k == 0);
  CHECK(s.D == 0);
  CHECK(s.c_max == 0);
}

TEST_CASE("reduce_mod_p") {
  const auto a = reduce_mod_p(parse_system({"x^2 + 1"}, kX), 5);
  CHECK(a[0] == parse_poly("x^2 + 1", kX));
  const auto b = reduce_mod_p(parse_system({"-51 + 5*x^2 - 27*z + x^9*y^7*z^8"}, kXYZ), 5);
  CHECK(b[0].coefficient({2, 0, 0}) == 0);
  CHECK(b[0].coefficient({0, 0, 1}) == 3);
  CHECK(b[0].coefficient({0, 0, 0}) == 4);
  CHECK(reduce_mod_p(parse_system({"x - 7"}, kX), 7)[0] == parse_poly("x", kX));
  CHECK_THROWS_AS(reduce_mod_p(parse_system({"x"}, kX), 9), InputError);
}

TEST_CASE("reduce_mod_p is a ring homomorphism on evaluations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pt(-20, 20);
  const Int primes[] = {2, 3, 5, 7, 101, 65537};
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(rng, kXYZ);
    const Int p = primes[i % 6];
    const auto fp = reduce_mod_p(PolySystem(kXYZ, {f}), p)[0];
    std::vector<Int> point{pt(rng), pt(rng), pt(rng)};
    Int lhs, rhs;
    mpz_fdiv_r(lhs.get_mpz_t(), Int(fp.eval(point)).get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(rhs.get_mpz_t(), Int(f.eval(point)).get_mpz_t(), p.get_mpz_t());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("uni_gcd") {
  CHECK(uni_gcd(UniPoly::from_ints({-1, 0, 1}), UniPoly::from_ints({-1, 1})) == UniPoly::from_ints({-1, 1}));
  CHECK(uni_gcd(UniPoly::from_ints({2, -3, 1}), UniPoly::from_ints({3, -4, 1})) == UniPoly::from_ints({-1, 1}));
  CHECK(uni_gcd(UniPoly::from_ints({1, 0, 1}), UniPoly::from_ints({-1, 0, 1})) == UniPoly::from_ints({1}));
  CHECK_THROWS_AS(uni_gcd(UniPoly{}, UniPoly{}), InputError);
}

TEST_CASE("uni_gcd divides both inputs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto common = random_uni(rng, 3);
    const auto f = random_uni(rng, 4) * common;
    const auto g = random_uni(rng, 4) * common;
    if (f.is_zero() && g.is_zero()) continue;
    const auto d = uni_gcd(f, g);
    CHECK((f % d).is_zero());
    CHECK((g % d).is_zero());
    CHECK(d.degree() >= common.degree());
  }
}

TEST_CASE("square_free_part") {
  CHECK(square_free_part(UniPoly::from_ints({1, -2, 1})) == UniPoly::from_ints({-1, 1}));
  CHECK(square_free_part(UniPoly::from_ints({-1, 0, 1})) == UniPoly::from_ints({-1, 0, 1}));
  CHECK(square_free_part(UniPoly::from_ints({0, 0, -1, 1})) == UniPoly::from_ints({0, -1, 1}));
  CHECK_THROWS_AS(square_free_part(UniPoly{}), InputError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_uni(rng, 3);
    const auto f = a * a * random_uni(rng, 3);
    if (f.is_zero()) continue;
    const auto s = square_free_part(f);
    CHECK(uni_gcd(s, s.derivative()).degree() == 0);
  }
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(UniPoly::from_ints({-2, 0, 1})) == 2);
  CHECK(sturm_count(UniPoly::from_ints({1, 0, 1})) == 0);
  CHECK(sturm_count(UniPoly::from_ints({-2, 0, 1}), Endpoint::at(0), Endpoint::pos_inf()) == 1);
  // (x-1)(x-2)(x-3) on (1, 3] counts 2 and 3.
  const auto c = UniPoly::from_ints({-6, 11, -6, 1});
  CHECK(sturm_count(c, Endpoint::at(1), Endpoint::at(3)) == 2);
  CHECK_THROWS_AS(sturm_count(c, Endpoint::at(3), Endpoint::at(1)), InputError);
}

TEST_CASE("sturm_count agrees with planted real roots") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 5), cnt(0, 5), quad(1, 20);
  for (int i = 0; i < 200; ++i) {
    UniPoly f = UniPoly::constant(1);
    std::set<Rat> roots;
    const int nl = cnt(rng);
    for (int j = 0; j < nl; ++j) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      roots.insert(r);
      f = f * UniPoly::linear_root(r);
    }
    const int nq = cnt(rng) % 3;
    for (int j = 0; j < nq; ++j) f = f * UniPoly::from_ints({quad(rng), 0, 1});
    if (f.degree() == 0) continue;
    CHECK(sturm_count(f) == roots.size());
    // Count on a sub-interval against the explicit root list.
    const Rat lo(num(rng), 3), hi = lo + Rat(num(rng) + 31, 2);
    std::size_t expected = 0;
    for (const auto& r : roots)
      if (r > lo && r <= hi) ++expected;
    CHECK(sturm_count(f, Endpoint::at(lo), Endpoint::at(hi)) == expected);
  }
}

TEST_CASE("rational_roots") {
  auto r = rational_roots(UniPoly::from_ints({1, -3, 2}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rat(1, 2));
  CHECK(r[1] == 1);
  CHECK(rational_roots(UniPoly::from_ints({-2, 0, 1})).empty());
  r = rational_roots(UniPoly::from_ints({0, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 0);
  CHECK_THROWS_AS(rational_roots(UniPoly{}), InputError);

  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int i = 0; i < 100; ++i) {
    std::set<Rat> planted;
    UniPoly f = UniPoly::from_ints({3, 0, 1});
    for (int j = 0; j < 3; ++j) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      planted.insert(q);
      f = f * UniPoly::linear_root(q);
    }
    const auto got = rational_roots(f);
    CHECK(std::vector<Rat>(planted.begin(), planted.end()) == got);
  }
}
