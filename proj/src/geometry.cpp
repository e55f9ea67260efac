#include <toricsolve/geometry.hpp>
#include <toricsolve/polytope.hpp>

namespace toricsolve {

namespace {

bool is_primitive_root(unsigned long g, unsigned long R) {
  unsigned long m = R - 1;
  for (unsigned long q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    while (m % q == 0) m /= q;
    Int r;
    mpz_powm_ui(r.get_mpz_t(), Int(g).get_mpz_t(), (R - 1) / q, Int(R).get_mpz_t());
    if (r == 1) return false;
  }
  if (m > 1) {
    Int r;
    mpz_powm_ui(r.get_mpz_t(), Int(g).get_mpz_t(), (R - 1) / m, Int(R).get_mpz_t());
    if (r == 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Int>> probe_sequence(std::size_t /*k*/, std::size_t count, std::size_t tuple_len,
                                             std::uint64_t seed, std::size_t degree_bound) {
  unsigned long R = std::max<unsigned long>({29, 4 * degree_bound + 1, count * tuple_len + 2});
  while (!is_prime(Int(R)) || R <= 4 * degree_bound || R - 1 <= count * tuple_len) ++R;
  unsigned long g = 2;
  while (!is_primitive_root(g, R)) ++g;
  std::vector<std::vector<Int>> out(count, std::vector<Int>(tuple_len));
  Int x;
  mpz_powm_ui(x.get_mpz_t(), Int(g).get_mpz_t(), seed % (R - 1), Int(R).get_mpz_t());
  for (auto& t : out)
    for (auto& v : t) {
      x = x * g % R;
      v = x + 1;
    }
  return out;
}

ProbeSystem probe_system(const PolySystem& Fin, std::size_t level, const std::vector<Int>& tuple) {
  ProbeSystem P;
  P.base = Fin.without_zeros();
  P.level = level;
  const std::size_t n = P.base.nvars(), m = P.base.size();
  if (tuple.size() < (level + 1) * n) throw InputError("probe tuple too short");
  const auto& vars = P.base.vars();
  P.weights.assign(tuple.begin(), tuple.begin() + static_cast<long>(n));
  std::vector<SparsePoly> pieces = P.base.polys();
  for (std::size_t t = 0; t < level; ++t) {
    P.forms.emplace_back(tuple.begin() + static_cast<long>((t + 1) * n),
                         tuple.begin() + static_cast<long>((t + 2) * n));
    SparsePoly l = SparsePoly::constant(vars, -1);
    for (std::size_t j = 0; j < n; ++j) l += SparsePoly::variable(vars, j) * P.forms.back()[j];
    P.hyperplanes.push_back(l);
    pieces.push_back(l);
  }
  std::vector<SparsePoly> G;
  for (std::size_t k = 0; k < n; ++k) {
    SparsePoly g(vars);
    Int w = P.weights[k];
    for (std::size_t j = 0; j < m + level; ++j, w *= P.weights[k]) g += pieces[j] * w;
    G.push_back(std::move(g));
  }
  P.G = PolySystem(vars, std::move(G));
  return P;
}

bool probe_hits(const ProbeSystem& P) {
  RUR R;
  try {
    R = rur(P.G);
  } catch (const DegenerateError&) {
    return false;
  }
  if (R.h.degree() < 1) return false;
  std::vector<UniPoly> g;
  for (std::size_t i = 0; i < R.h_i.size(); ++i) g.push_back(R.h_i[i] * Rat(1 / Rat(R.a_i[i])));
  UniPoly d = R.h;
  auto meet = [&](const SparsePoly& f) {
    const UniPoly r = compose_mod(f, g, R.h);
    if (!r.is_zero()) d = uni_gcd(d, r);
  };
  for (const auto& f : P.base.polys()) meet(f);
  for (const auto& l : P.hyperplanes) meet(l);
  return d.degree() >= 1;
}

DimensionReport dimension_report(const PolySystem& Fin, const DimensionOptions& opts) {
  const PolySystem F = Fin.without_zeros();
  DimensionReport rep;
  const std::size_t n = F.nvars(), m = F.size();
  if (n == 0) throw InputError("dimension needs at least one variable");
  if (m == 0) {
    rep.dimension = static_cast<long>(n);
    return rep;
  }
  for (const auto& f : F.polys())
    if (f.is_constant()) return rep;
  if (n > opts.max_vars) throw CapExceeded("dimension: " + std::to_string(n) + " variables exceeds the cap");
  const Int V = normalized_volume(newton_polytope(F));
  if (V > opts.max_volume) throw CapExceeded("dimension: V_F = " + V.get_str() + " exceeds the cap");
  for (const auto& f : F.polys()) rep.k += f.size();
  const std::size_t count = 2 * rep.k + 1;
  for (std::size_t i = n; i-- > 0;) {
    LevelVotes v;
    v.level = i;
    const auto tuples = probe_sequence(rep.k, count, (i + 1) * n, opts.seed + i, m + i + 1);
    for (const auto& t : tuples) {
      if (probe_hits(probe_system(F, i, t)))
        ++v.yes;
      else
        ++v.no;
      if (v.yes > rep.k || v.no > rep.k) break;
    }
    rep.levels.push_back(v);
    if (v.yes > rep.k) {
      rep.dimension = static_cast<long>(i);
      return rep;
    }
  }
  return rep;
}

long dimension(const PolySystem& F, const DimensionOptions& opts) { return dimension_report(F, opts).dimension; }

bool feasible_c(const PolySystem& F, const DimensionOptions& opts) { return dimension(F, opts) >= 0; }

}  // namespace toricsolve
