#include <doctest.h>

#include <toricsolve/arith.hpp>
#include <toricsolve/bounds.hpp>
#include <toricsolve/polytope.hpp>

using namespace toricsolve;

namespace {

const std::vector<std::string> kX{"x"}, kXY{"x", "y"};

// trial division
bool slow_prime(u64 v) {
  if (v < 2) return false;
  for (u64 d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

u64 enumerate_roots(const SparsePoly& f, u64 p) {
  u64 c = 0;
  for (u64 x = 0; x < p; ++x) {
    const Int v = f.eval(std::vector<Int>{Int(x)});
    if (v % Int(p) == 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("sieve") {
  CHECK(primes_upto(10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_in(90, 100) == std::vector<u64>{97});
  CHECK(primes_upto(1).empty());
  CHECK(prime_count(2, 1'000'000) == 78498);
  // segment boundaries against trial division
  const u64 lo = 2'097'000, hi = 2'099'500;
  std::vector<u64> expect;
  for (u64 v = lo; v <= hi; ++v)
    if (slow_prime(v)) expect.push_back(v);
  CHECK(primes_in(lo, hi) == expect);
  CHECK(primes_in(2, 3) == std::vector<u64>{2, 3});
  CHECK_THROWS_AS(primes_upto(100, 50), CapExceeded);
}

TEST_CASE("count_roots_mod_p") {
  const auto f = parse_system({"x^2+1"}, kX);
  CHECK(count_roots_mod_p(f, 5) == 2);
  CHECK(count_roots_mod_p(f, 7) == 0);
  CHECK(count_roots_mod_p(f, 2) == 1);
  for (u64 p : {2, 3, 5, 11, 13}) CHECK(count_roots_mod_p(parse_system({"x", "y"}, kXY), p) == 1);
  // univariate gcd path against enumeration
  const auto g = parse_poly("x^5 - 3*x^3 + 2*x + 6", kX);
  for (u64 p : primes_upto(200)) CHECK(count_roots_mod_p(PolySystem(kX, {g}), p) == enumerate_roots(g, p));
  CHECK(count_roots_mod_p(parse_system({"x*y-1"}, kXY), 7) == 6);
  CHECK(count_roots_mod_p(parse_system({"3*x"}, kX), 3) == 3);
  CHECK_THROWS_AS(count_roots_mod_p(parse_system({"x", "y"}, kXY), 20011, 1000), CapExceeded);
  CHECK_THROWS_AS(count_roots_mod_p(f, 9), InputError);
}

TEST_CASE("densities") {
  const auto f = parse_system({"x^2+1"}, kX);
  const auto r = scan(f, 100);
  CHECK(r.pi == 25);
  CHECK(r.pi_F == 12);
  CHECK(r.N_F == 23);
  const auto e3 = parse_system({"(x^2-2)*(x^2-7)*(x^2-14)"}, kX);
  CHECK(pi_F(e3, 10000) == 1229);
  const auto big = scan(f, 10000);
  for (const auto& [p, c] : big.records)
    if (p > 2) CHECK((c > 0) == (p % 4 == 1));
  const double ratio = static_cast<double>(big.pi_F) / static_cast<double>(big.pi);
  CHECK(ratio > 0.48);
  CHECK(ratio < 0.53);
  const auto two = scan(parse_system({"x^2-2"}, kX), 10000);
  const double r2 = static_cast<double>(two.pi_F) / static_cast<double>(two.pi);
  CHECK(r2 > 0.45);
  CHECK(r2 < 0.55);
  CHECK(two.N_F <= 2 * two.pi);
  u64 prev = 0;
  for (u64 x : {10, 100, 1000}) {
    const auto s = scan(f, x);
    CHECK(s.pi_F <= s.pi);
    CHECK(s.N_F >= s.pi_F);
    CHECK(s.pi_F >= prev);
    prev = s.pi_F;
  }
}

TEST_CASE("infeasible prime counts stay below a_F") {
  const std::vector<PolySystem> suite{parse_system({"x", "x-1"}, kX), parse_system({"x-1", "x-3"}, kX),
                                      parse_system({"x^2+1", "x^2+3"}, kX), parse_system({"x*y-1", "x*y-2"}, kXY)};
  const std::vector<u64> limits{10000, 10000, 10000, 300};
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& F = suite[i];
    const auto st = system_stats(F);
    const auto V = normalized_volume(newton_polytope(F));
    const auto bound = aF_bound(st.n, st.m, st.D, V, log_abs(st.c_max));
    CHECK(Rat(Int(pi_F(F, limits[i]))) <= bound.value.lower());
  }
  CHECK(pi_F(suite[0], 10000) == 0);
  CHECK(pi_F(suite[1], 10000) == 1);
}

TEST_CASE("primes_in_interval_check") {
  auto r = primes_in_interval_check(150, 150);
  CHECK(r.floor_bound == 28065);
  CHECK(r.pass);
  CHECK(r.count == prime_count(150ull * 150 * 150 * 150 + 1, 150ull * 151 * 151 * 151 - 1));
  r = primes_in_interval_check(200, 150);
  CHECK(r.pass);
  const auto again = primes_in_interval_check(200, 150);
  CHECK(again.count == r.count);
  CHECK(again.floor_bound == r.floor_bound);
  CHECK_THROWS_AS(primes_in_interval_check(148, 148), InputError);
  CHECK_NOTHROW(primes_in_interval_check(149, 149));
}

TEST_CASE("koiran_simulate") {
  auto v = koiran_simulate(parse_system({"x-1"}, kX), 10, 5, 10, 20, 7);
  CHECK(v.size() == 20);
  for (const auto& k : v) {
    CHECK(k.feasible);
    CHECK(k.prime.has_value());
    CHECK(*k.prime >= 10 * k.t * k.t * k.t);
  }
  for (const auto& k : koiran_simulate(parse_system({"x", "x-1"}, kX), 10, 5, 10, 20, 7)) CHECK_FALSE(k.feasible);
  const auto a = koiran_simulate(parse_system({"x^2-2"}, kX), 10, 5, 10, 20, 3);
  const auto b = koiran_simulate(parse_system({"x^2-2"}, kX), 10, 5, 10, 20, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].prime == b[i].prime);
  }
  CHECK_THROWS_AS(koiran_simulate(parse_system({"x-1"}, kX), 10, 10, 5, 1, 0), InputError);
}
