#include <doctest.h>

#include <toricsolve/bounds.hpp>
#include <toricsolve/polytope.hpp>
#include <toricsolve/resultant.hpp>

#include "planted.hpp"

#include <cmath>

using namespace toricsolve;

namespace {

// double-precision oracle agrees with the rigorous interval
void close_to(const BoundReport& r, double expect) {
  CHECK(r.value.lo_double() <= expect * (1 + 1e-12));
  CHECK(r.value.hi_double() >= expect * (1 - 1e-12));
  CHECK(r.value.width() < Rat(1, 1000000));
}

const std::vector<std::string> kX{"x"}, kXY{"x", "y"};

}  // namespace

TEST_CASE("bezout") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const auto F = parse_system({"144+2*x-3*y^2+x^7*y^8*z^9", "-51+5*x^2-27*z+x^9*y^7*z^8",
                               "7-6*x+8*x^8*y^9*z^7-12*x^8*y^8*z^7"},
                              xyz);
  CHECK(bezout_bound(F) == 13824);
  CHECK(bezout_bound(parse_system({"x-1"}, kX)) == 1);
  CHECK(bezout_bound(parse_system({"x^2-1", "y^3-1"}, kXY)) == 6);
}

TEST_CASE("growth_bound") {
  const auto r = growth_bound(2, 3, 0, 1, 1, 3, {Int(1)});
  const double expect = std::exp(13.0 / 12) / std::sqrt(M_PI) * 2 * std::pow(4.0, 3) * 1 *
                        std::pow(std::sqrt(3.0) * 2, 3) * 1;
  close_to(r, expect);
  // i = V_F: no binomial, no |u| dependence
  const auto a = growth_bound(2, 3, 2, 1, 1, 3, {Int(5), Int(7)});
  const auto b = growth_bound(2, 3, 2, 1, 1, 3, {Int(1)});
  CHECK(a.upper() == b.upper());
  CHECK(growth_bound(2, 3, 0, 2, 1, 3, {Int(1)}).value.lo_double() > r.value.hi_double());
  CHECK_THROWS_AS(growth_bound(2, 3, 3, 1, 1, 3, {Int(1)}), InputError);
}

TEST_CASE("height and size bounds") {
  HeightInputs in;
  in.n = 1;
  in.m = 1;
  in.V_F = 1;
  in.M_F = 2;
  in.c = 3;
  in.mu = 2;
  const auto h = height_bound_hF(in);
  // C(1,2) = 0: the projection factor is sqrt(1) * 1
  const double expect = std::log(std::exp(13.0 / 6) / M_PI * std::sqrt(3.0) * 2 * 16 * 1 * 16);
  close_to(h, expect);
  const auto s = size_bound(in);
  CHECK(s.value.lo_double() >= std::log(3.0));
  // sqrt 2 versus sqrt(n)(C(V,2)+1)^n
  in.n = 2;
  in.m = 2;
  in.V_F = 2;
  CHECK(size_bound(in).upper() <= height_bound_hF(in).upper());
  const auto sq = height_bound_hF(in);
  in.m = 3;
  in.mu = 2;
  CHECK(height_bound_hF(in).upper() >= sq.upper());
}

TEST_CASE("rur denominator, a_F and the A_F constants") {
  const Interval sigma = log_abs(7);
  close_to(rur_denominator_bound(1, sigma), 2 * std::log(7.0));
  CHECK(rur_denominator_bound(3, log_abs(8)).upper() > rur_denominator_bound(3, sigma).upper());
  close_to(aF_bound(1, 2, 1, 1, Interval(Int(0))), 1 + 1040 * std::log(2.0));
  CHECK(aF_bound(1, 2, 2, 1, Interval(Int(0))).upper() > aF_bound(1, 2, 1, 1, Interval(Int(0))).upper());
  const auto k = AF_constants(1, Interval(Int(0)), Interval(Int(0)), 1);
  CHECK(k.B_F.contains(Rat(0)) == false);
  CHECK(std::abs(k.B_F.hi_double() - 72 * std::sqrt(3.0) * (1 + std::sqrt(2.0))) < 1e-9);
  CHECK(k.B_F.lo_double() > 301.07);
  CHECK(k.B_F.hi_double() < 301.08);
  CHECK(k.C_F.contains(2));
  CHECK(k.D_F.contains(25));
  CHECK(k.t0 == 4963041);
  const double B = k.B_F.hi_double();
  const double A = 1296 * B * B * std::pow(std::log(B), 4) + 36 * 4 * std::pow(std::log(2.0), 2) + 50 * std::log(25.0);
  CHECK(std::abs(k.A_F.get_d() - std::ceil(A)) <= 1);
  CHECK(k.t0_expression.hi_double() < 11000);
  const auto k2 = AF_constants(2, log_abs(3), log_abs(2), 2);
  CHECK(k2.A_F > k.A_F);
}

TEST_CASE("mignotte and discriminant bounds") {
  close_to(mignotte_bound(2, 1), 4 * std::sqrt(3.0));
  CHECK(mignotte_bound(0, 5).value.contains(5));
  close_to(disc_bound(2, 2, 1), 2 * (2 * std::log(2.0) + std::log(3.0)));
  CHECK(disc_bound(2, 2, 2).upper() > disc_bound(2, 2, 1).upper());
  // |disc(x^2 - 1)| = 4
  const Rat d = discriminant(UniPoly::from_ints({-1, 0, 1}));
  CHECK(abs(d) == 4);
  CHECK(log_abs(4).upper() <= disc_bound(2, 2, 1).value.lower());

  // factors of random products stay under the bound for the product
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 40; ++t) {
    std::vector<UniPoly> fs;
    UniPoly prod = UniPoly::constant(1);
    for (int k = 0; k < 3; ++k) {
      std::vector<Int> v(2 + t % 3);
      for (auto& x : v) x = c(rng);
      v.back() = 1;
      fs.push_back(UniPoly::from_ints(v));
      prod = prod * fs.back();
    }
    Int cmax = 0;
    for (const auto& x : prod.coeffs()) cmax = std::max(cmax, abs_int(x.get_num()));
    const Rat bound = mignotte_bound(static_cast<unsigned long>(prod.degree()), cmax).upper();
    for (const auto& f : fs)
      for (const auto& x : f.coeffs()) CHECK(Rat(abs(x)) <= bound);
  }
}

TEST_CASE("real bounds") {
  CHECK(components_bound(3, 3, 4, 2) == 576);
  CHECK(components_bound(3, 243, 4, 0) == 972);
  CHECK(opm_bound(2, 3, 2) == 203125);
  CHECK(khovanski_bound(3, 9) == Int("18014398509481984"));
  // grid against min{n+1,(s+1)/(s-1)}(2s)^n(d+1)
  for (std::size_t s : {1, 2, 3})
    for (std::size_t d : {1, 2, 3}) {
      const double f = s == 1 ? 4.0 : std::min(4.0, (s + 1.0) / (s - 1.0));
      const double expect = std::floor(f * std::pow(2.0 * s, 3) * (d + 1));
      CHECK(components_bound(3, static_cast<long>(d + 1), 4, s).get_d() == expect);
    }
}

TEST_CASE("soundness against constructed reductions") {
  std::vector<PolySystem> suite{parse_system({"x^2-2", "y-1"}, kXY), parse_system({"x-3"}, kX),
                                parse_system({"x^2-2", "x^2-2"}, kX), parse_system({"x*y-1", "x+y-3"}, kXY)};
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) suite.push_back(planted::make(rng, 2, 2, 3).F);
  for (const auto& F : suite) {
    const auto R = rur(F);
    const auto& red = R.base;
    // sigma(h_F) before and after normalization
    const auto hb = height_bound_hF(height_inputs(F, red));
    CHECK(sigma_of(red.raw).upper() <= hb.value.lower());
    CHECK(sigma_of(red.h.primitive_ints()).upper() <= hb.value.lower());
    const Interval sig = sigma_of(red.h.primitive_ints());
    const auto db = rur_denominator_bound(red.V_F, sig);
    for (const auto& a : R.a_i) CHECK(log_abs(a).upper() <= db.value.lower());
    // raw Pert coefficients against the growth bound for the deformed system
    Int c = 0, cs = 0;
    unsigned long mu = 0;
    for (std::size_t i = 0; i < red.square.size(); ++i) {
      c = std::max(c, red.square[i].max_abs_coefficient());
      cs = std::max(cs, red.fstar[i].max_abs_coefficient());
      mu = std::max<unsigned long>(mu, (red.square[i] - red.fstar[i]).size());
      mu = std::max<unsigned long>(mu, red.fstar[i].size());
    }
    for (std::size_t i = 0; i < red.raw.size(); ++i) {
      const auto g = growth_bound(red.V_F, Int(static_cast<unsigned long>(red.M_F)), i, c, cs, mu, red.u);
      CHECK(Rat(abs_int(red.raw[i])) <= g.value.lower());
    }
  }
}
