#include <toricsolve/polytope.hpp>
#include <toricsolve/resultant.hpp>
#include <toricsolve/unired.hpp>

#include <random>

namespace toricsolve {

UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m) {
  UniPoly r0 = m, r1 = a % m, s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (s0 * Rat(1 / r0.coeff(0))) % m;
}

UniPoly compose_mod(const SparsePoly& f, const std::vector<UniPoly>& g, const UniPoly& m) {
  if (g.size() != f.nvars()) throw InputError("compose_mod needs one polynomial per variable");
  std::vector<std::vector<UniPoly>> powers(g.size(), {UniPoly::constant(1)});
  UniPoly acc;
  for (const auto& [e, c] : f.terms()) {
    UniPoly t = UniPoly::constant(Rat(c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= static_cast<std::size_t>(e[i])) pw.push_back(mul_mod(pw.back(), g[i], m));
      if (e[i] > 0) t = mul_mod(t, pw[static_cast<std::size_t>(e[i])], m);
    }
    acc = acc + t;
  }
  return acc % m;
}

PolySystem fill_system(const PolySystem& F, unsigned variant) {
  const std::size_t n = F.nvars();
  if (F.size() != n) throw InputError("fill_system needs as many polynomials as variables");
  Support A{Exponents(n, 0)};
  for (std::size_t j = 0; j < n; ++j) {
    Exponents e(n, 0);
    e[j] = 1;
    A.push_back(e);
  }
  for (const auto& f : F.polys())
    for (const auto& [e, c] : f.terms()) A.push_back(e);
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::mt19937_64 rng(variant);
  std::uniform_int_distribution<int> coef(1, 9);
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    SparsePoly f(F.vars());
    for (const auto& a : A) f.add_term(a, variant == 0 ? 1 : coef(rng));
    out.push_back(std::move(f));
  }
  return PolySystem(F.vars(), std::move(out));
}

namespace {

long distinct_roots(const UniPoly& h) { return h.degree() <= 0 ? 0 : square_free_part(h).degree(); }

// Newton interpolation through (0, ys[0]), (1, ys[1]), ...
UniPoly interpolate_rat(const std::vector<Rat>& ys) {
  std::vector<Rat> d = ys;
  const std::size_t N = d.size();
  for (std::size_t k = 1; k < N; ++k)
    for (std::size_t i = N - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / Rat(static_cast<long>(k));
  UniPoly acc = UniPoly::constant(d[N - 1]);
  for (std::size_t i = N - 1; i-- > 0;)
    acc = acc * UniPoly::linear_root(Rat(static_cast<long>(i))) + UniPoly::constant(d[i]);
  return acc;
}

}  // namespace

UnivariateReduction univariate_reduction(const PolySystem& Fin, const ReductionOptions& opts) {
  const PolySystem F = Fin.without_zeros();
  const std::size_t n = F.nvars(), m = F.size();
  if (n == 0) throw InputError("univariate reduction needs at least one variable");
  if (m == 0) throw InputError("univariate reduction needs a nonzero polynomial");
  const Int V = normalized_volume(newton_polytope(F));
  const Int cap = 1 + binomial(V.get_ui(), 2);

  const unsigned mixes = m > n ? 3 : 1;
  bool exhausted = false;
  for (unsigned mix = 0; mix < mixes; ++mix) {
    UnivariateReduction R;
    std::vector<SparsePoly> sq;
    if (m == n) {
      R.kind = UnivariateReduction::Case::Square;
      sq = F.polys();
    } else if (m < n) {
      R.kind = UnivariateReduction::Case::Under;
      sq = F.polys();
      while (sq.size() < n) sq.push_back(F.polys().back());
    } else {
      R.kind = UnivariateReduction::Case::Over;
      for (std::size_t i = 0; i < n; ++i) {
        const Int e = static_cast<long>(i + 1 + mix * n);
        R.mixing.push_back(e);
        SparsePoly f(F.vars());
        Int w = 1;
        for (std::size_t j = 0; j < m; ++j, w *= e) f += F[j] * w;
        sq.push_back(std::move(f));
      }
    }
    R.square = PolySystem(F.vars(), sq);
    R.V_F = V;
    for (unsigned variant = 0; variant < 4; ++variant) {
      R.fill_variant = variant;
      R.fstar = fill_system(R.square, variant);
      try {
        const PertOperator op(R.square, R.fstar);
        R.M_F = op.matrix().size();
        auto accept = [&](const PertResult& p, std::vector<Int> u, const Int& eps) {
          R.raw = p.coefficients;
          R.h = p.h.is_zero() ? p.h : p.h.primitive();
          R.u = std::move(u);
          R.epsilon = eps;
          return R;
        };
        if (n == 1) return accept(op({Int(1)}), {Int(1)}, 1);
        for (Int eps = opts.first_epsilon; eps <= cap; ++eps) {
          std::vector<Int> u;
          Int w = eps;
          for (std::size_t i = 0; i < n; ++i, w *= eps) u.push_back(w);
          const PertResult base = op(u);
          const long k = distinct_roots(base.h);
          R.minus.clear();
          R.plus.clear();
          bool ok = true;
          for (std::size_t i = 0; i < n; ++i) {
            auto v = u;
            v[i] -= 1;
            const auto lo = op(v).h;
            v[i] += 2;
            const auto hi = op(v).h;
            // a collision under u separates under some u +- e_i
            ok = distinct_roots(lo) <= k && distinct_roots(hi) <= k;
            R.minus.push_back(lo.is_zero() ? lo : lo.primitive());
            R.plus.push_back(hi.is_zero() ? hi : hi.primitive());
          }
          if (ok) return accept(base, u, eps);
        }
        exhausted = true;
      } catch (const DegenerateError&) {
        // zero determinant for this filling system
      }
      if (exhausted) throw DegenerateError("epsilon search exhausted without a collision-free projection");
    }
  }
  throw DegenerateError("Pert vanishes identically for every filling system tried");
}

RUR rur_from(const UnivariateReduction& base) {
  RUR out;
  out.base = base;
  const std::size_t n = base.square.nvars();
  out.h = base.h.degree() <= 0 ? base.h : square_free_part(base.h).primitive();
  const UniPoly theta = UniPoly::from_ints({0, 1});
  if (out.h.degree() <= 0) {
    out.h_i.assign(n, UniPoly());
    out.a_i.assign(n, Int(1));
    return out;
  }
  auto finish = [&](UniPoly g) {
    g = g % out.h;
    Int a = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(a.get_mpz_t(), a.get_mpz_t(), c.get_den_mpz_t());
    out.h_i.push_back(g * Rat(a));
    out.a_i.push_back(a);
  };
  if (n == 1) {
    finish(theta * Rat(1 / Rat(base.u[0])));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly qm = square_free_part(base.minus.at(i)).primitive();
    const UniPoly qs = square_free_part(base.plus.at(i)).primitive();
    if (qm.degree() == 1) {
      finish(theta + UniPoly::constant(qm.coeff(0) / qm.coeff(1)));
      continue;
    }
    if (qs.degree() == 1) {
      finish(UniPoly::constant(-qs.coeff(0) / qs.coeff(1)) - theta);
      continue;
    }
    if (qm.degree() < 1 || qs.degree() < 1) throw DegenerateError("perturbed reduction lost its roots");
    // R0(theta), R1(theta) for q-(t + c) and q*(2 theta - c - t), by interpolation in theta;
    // the shift c keeps the common root t* - c away from 0, where R0 degenerates
    long c = 0;
    while (qm.eval(Rat(c)) == 0) ++c;
    const UniPoly qmc = qm.compose(UniPoly::from_ints({c, 1}));
    const std::size_t bound = static_cast<std::size_t>((qm.degree() - 1) * qs.degree());
    std::vector<Rat> y0, y1;
    for (std::size_t k = 0; k <= bound; ++k) {
      const auto g = qs.compose(UniPoly::from_ints({2 * static_cast<long>(k) - c, -1}));
      const auto fs = first_subresultant(qmc, g);
      y0.push_back(fs.R0);
      y1.push_back(fs.R1);
    }
    const UniPoly r0 = interpolate_rat(y0) % out.h, r1 = interpolate_rat(y1) % out.h;
    const auto inv = inverse_mod(r0, out.h);
    if (!inv) throw DegenerateError("r_{i,0} is not invertible modulo h");
    finish(theta - UniPoly::constant(c) + mul_mod(r1, *inv, out.h));
  }
  return out;
}

RUR rur(const PolySystem& F) {
  ReductionOptions opts;
  for (;;) {
    const auto base = univariate_reduction(F, opts);
    try {
      RUR r = rur_from(base);
      if (verify_rur(base.square, r)) return r;
    } catch (const DegenerateError&) {
    }
    if (base.square.nvars() == 1) throw DegenerateError("RUR failed for a univariate system");
    opts.first_epsilon = base.epsilon + 1;
  }
}

bool verify_rur(const PolySystem& F, const RUR& r) {
  if (r.h.degree() <= 0) return true;
  if (r.h_i.size() != F.nvars() || r.a_i.size() != F.nvars()) return false;
  std::vector<UniPoly> g;
  for (std::size_t i = 0; i < F.nvars(); ++i) g.push_back(r.h_i[i] * Rat(1 / Rat(r.a_i[i])));
  for (const auto& f : F.polys())
    if (!compose_mod(f, g, r.h).is_zero()) return false;
  return true;
}

}  // namespace toricsolve
