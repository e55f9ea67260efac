#include <toricsolve/bounds.hpp>

#include <algorithm>

namespace toricsolve {

namespace {

Interval num(const Int& v, mpfr_prec_t prec) { return Interval(v, prec); }
Interval num(long v, mpfr_prec_t prec) { return Interval(Int(v), prec); }

std::string str(std::size_t v) { return std::to_string(v); }

// C(V, 2) with C(1, 2) = C(0, 2) = 0
Int choose2(const Int& V) { return V < 2 ? Int(0) : Int(V * (V - 1) / 2); }

}  // namespace

Interval log_abs(const Int& v, mpfr_prec_t prec) {
  if (v == 0) throw InputError("log of zero");
  return num(abs_int(v), prec).log();
}

Interval sigma_of(const std::vector<Int>& coeffs, mpfr_prec_t prec) {
  Int c = 0;
  for (const auto& v : coeffs) c = std::max(c, abs_int(v));
  return log_abs(c, prec);
}

Int bezout_bound(const PolySystem& F) {
  Int b = 1;
  for (const auto& f : F.polys()) b *= Int(static_cast<long>(f.total_degree()));
  return b;
}

BoundReport growth_bound(const Int& V_F, const Int& M_F, unsigned long i, const Int& c, const Int& cstar,
                         unsigned long mu, const std::vector<Int>& u, mpfr_prec_t prec) {
  if (Int(i) > V_F) throw InputError("growth_bound needs 0 <= i <= V_F");
  BoundReport r;
  r.name = "growth";
  r.formula = "e^(13/12)/sqrt(pi) sqrt(M_F+1) 4^(M_F-i/2) |u|^(V_F-i) (sqrt(mu)(c+c*))^M_F C(V_F,i)";
  r.inputs = {{"V_F", V_F.get_str()}, {"M_F", M_F.get_str()}, {"i", str(i)},
              {"c", c.get_str()},     {"c*", cstar.get_str()}, {"mu", str(mu)}};
  Int unorm2 = 0;
  for (const auto& v : u) unorm2 += v * v;
  r.inputs.emplace_back("|u|^2", unorm2.get_str());
  const unsigned long M = M_F.get_ui(), V = V_F.get_ui();
  Interval v = Interval::exp_of(Rat(13, 12), prec) / Interval::pi(prec).sqrt();
  v = v * num(M_F + 1, prec).sqrt();
  // 4^(M - i/2) = 2^(2M) / 2^i
  v = v * num(2, prec).pow(2 * M) / num(2, prec).pow(i);
  v = v * num(unorm2, prec).sqrt().pow(V - i);
  v = v * (num(Int(mu), prec).sqrt() * num(c + cstar, prec)).pow(M);
  v = v * num(binomial(V, i), prec);
  r.value = v;
  return r;
}

HeightInputs height_inputs(const PolySystem& Fin, const UnivariateReduction& red) {
  const PolySystem F = Fin.without_zeros();
  const auto st = system_stats(F);
  HeightInputs in;
  in.n = st.n;
  in.m = st.m;
  in.V_F = red.V_F;
  in.M_F = Int(static_cast<unsigned long>(red.M_F));
  in.c = st.c_max;
  in.mu = st.mu;
  return in;
}

namespace {

// log of everything except the projection factor, plus that factor's log
BoundReport height_like(const HeightInputs& in, const Interval& log_proj, const std::string& name,
                        const std::string& proj_text, mpfr_prec_t prec) {
  BoundReport r;
  r.name = name;
  const bool over = in.m > in.n;
  const unsigned long V = in.V_F.get_ui();
  const Interval M = num(in.M_F, prec), VF = num(in.V_F, prec), two = num(2, prec);
  Interval v = Interval(Rat(13, 6), prec) - Interval::pi(prec).log();
  v = v + num(in.M_F + 1, prec).log() / two;
  v = v + VF * two.log() + M * num(4, prec).log();
  v = v + VF * log_proj;
  if (!over) {
    r.formula = "log{e^(13/6)/pi sqrt(M_F+1) 2^V_F 4^M_F (" + proj_text + ")^V_F (c+1)^M_F}";
    v = v + M * num(in.c + 1, prec).log();
  } else {
    r.formula = "log{e^(13/6)/pi sqrt(M_F+1) 2^V_F 4^M_F (" + proj_text +
                ")^V_F sqrt(mu)^M_F (m(m V_F+1)^(m-1) c+1)^M_F}";
    Int w;
    mpz_pow_ui(w.get_mpz_t(), Int(Int(static_cast<unsigned long>(in.m)) * V + 1).get_mpz_t(), in.m - 1);
    const Int inner = Int(static_cast<unsigned long>(in.m)) * w * in.c + 1;
    v = v + M * (num(Int(in.mu), prec).log() / two + num(inner, prec).log());
  }
  r.inputs = {{"n", str(in.n)},          {"m", str(in.m)}, {"V_F", in.V_F.get_str()},
              {"M_F", in.M_F.get_str()}, {"c", in.c.get_str()}};
  if (over) r.inputs.emplace_back("mu", str(in.mu));
  r.value = v;
  return r;
}

}  // namespace

BoundReport height_bound_hF(const HeightInputs& in, mpfr_prec_t prec) {
  // log(sqrt(n) (C(V_F,2)+1)^n)
  const Interval lp = num(Int(static_cast<unsigned long>(in.n)), prec).log() / num(2, prec) +
                      num(Int(static_cast<unsigned long>(in.n)), prec) * num(choose2(in.V_F) + 1, prec).log();
  return height_like(in, lp, "height_hF", "sqrt(n)(C(V_F,2)+1)^n", prec);
}

BoundReport size_bound(const HeightInputs& in, mpfr_prec_t prec) {
  return height_like(in, num(2, prec).log() / num(2, prec), "size", "sqrt(2)", prec);
}

BoundReport rur_denominator_bound(const Int& V_F, const Interval& sigma_h, mpfr_prec_t prec) {
  if (V_F < 1) throw InputError("rur_denominator_bound needs V_F >= 1");
  BoundReport r;
  r.name = "rur_denominator";
  r.formula = "V_F{(V_F-1)[log(V_F(V_F+1)^4 64^V_F)+2 sigma]+sigma}+sigma+log V_F";
  r.inputs = {{"V_F", V_F.get_str()}, {"sigma(h_F)", sigma_h.upper().get_str()}};
  const Interval V = num(V_F, prec), two = num(2, prec);
  const Interval inner = V.log() + num(4, prec) * num(V_F + 1, prec).log() + V * num(64, prec).log();
  r.value = V * ((V - num(1, prec)) * (inner + two * sigma_h) + sigma_h) + sigma_h + V.log();
  return r;
}

BoundReport aF_bound(std::size_t n, std::size_t m, std::int64_t D, const Int& V_F, const Interval& sigma,
                     mpfr_prec_t prec) {
  if (m == 0 || D < 0) throw InputError("aF_bound needs m >= 1 and D >= 0");
  BoundReport r;
  r.name = "a_F";
  r.formula = "1+2(n+1)^3 D V_F[sigma+log m+2^(2n+4) D log(D+1)]";
  r.inputs = {{"n", str(n)}, {"m", str(m)}, {"D", std::to_string(D)}, {"V_F", V_F.get_str()},
              {"sigma", sigma.upper().get_str()}};
  const Interval Di = num(D, prec);
  Int p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * n + 4);
  const Interval bracket =
      sigma + num(Int(static_cast<unsigned long>(m)), prec).log() + num(p2, prec) * Di * num(D + 1, prec).log();
  const Int n1 = static_cast<unsigned long>(n + 1);
  r.value = num(1, prec) + num(2 * n1 * n1 * n1, prec) * Di * num(V_F, prec) * bracket;
  return r;
}

AFConstants AF_constants(const Int& V_F, const Interval& log_disc_g, const Interval& sum_log_ai, std::size_t n,
                         mpfr_prec_t prec) {
  AFConstants k;
  const Interval root = num(3, prec).sqrt() * (num(1, prec) + num(2, prec).sqrt());
  k.B_F = num(72, prec) * root * num(V_F, prec);
  k.C_F = num(24, prec) * root * log_disc_g + num(2, prec);
  k.D_F = num(12, prec) * num(V_F, prec) * (log_disc_g + sum_log_ai + num(Int(static_cast<unsigned long>(n)), prec)) +
          num(13, prec);
  const Interval lB = k.B_F.log(), lC = k.C_F.log(), lD = k.D_F.log();
  const Interval A = num(1296, prec) * k.B_F.pow(2) * lB.pow(4) + num(36, prec) * k.C_F.pow(2) * lC.pow(2) +
                     num(2, prec) * k.D_F * lD;
  const Rat up = A.upper();
  mpz_cdiv_q(k.A_F.get_mpz_t(), up.get_num_mpz_t(), up.get_den_mpz_t());
  k.t0_expression =
      num(1296, prec) * ((num(1, prec) + num(3, prec).log()) / num(3, prec) + num(1296, prec).log());
  return k;
}

BoundReport mignotte_bound(unsigned long D, const Int& c, mpfr_prec_t prec) {
  BoundReport r;
  r.name = "mignotte";
  r.formula = "sqrt(D+1) 2^D c";
  r.inputs = {{"D", str(D)}, {"c", c.get_str()}};
  r.value = num(Int(D + 1), prec).sqrt() * num(2, prec).pow(D) * num(c, prec);
  return r;
}

BoundReport disc_bound(unsigned long D, unsigned long Dprime, const Int& c, mpfr_prec_t prec) {
  if (c < 1) throw InputError("disc_bound needs c >= 1");
  BoundReport r;
  r.name = "disc";
  r.formula = "D'(D log 2+log(D'+1)+log c)";
  r.inputs = {{"D", str(D)}, {"D'", str(Dprime)}, {"c", c.get_str()}};
  r.value = num(Int(Dprime), prec) *
            (num(Int(D), prec) * num(2, prec).log() + num(Int(Dprime + 1), prec).log() + num(c, prec).log());
  return r;
}

Int components_bound(std::size_t n, const Int& V_F, std::size_t /*p*/, std::size_t s) {
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  if (n == 0) throw InputError("components_bound needs n >= 1");
  if (s == 0) return two_n / 2 * V_F;
  Int s_n;
  mpz_ui_pow_ui(s_n.get_mpz_t(), s, n);
  Rat factor = Rat(static_cast<unsigned long>(n + 1));
  if (s > 1) factor = std::min(factor, Rat(Int(static_cast<unsigned long>(s + 1)), Int(static_cast<unsigned long>(s - 1))));
  const Rat v = factor * Rat(two_n * s_n * V_F);
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

Int opm_bound(std::size_t d, std::size_t n, std::size_t s) {
  const Int dns = Int(static_cast<unsigned long>(d)) * static_cast<unsigned long>(n) * static_cast<unsigned long>(s);
  Int p;
  mpz_pow_ui(p.get_mpz_t(), Int(2 * dns + 1).get_mpz_t(), n);
  return (dns + 1) * p;
}

Int khovanski_bound(std::size_t n, std::size_t kprime) {
  Int a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), n + 1, kprime);
  mpz_ui_pow_ui(b.get_mpz_t(), 2, kprime * (kprime == 0 ? 0 : kprime - 1) / 2);
  return a * b;
}

}  // namespace toricsolve
