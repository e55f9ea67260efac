#include <toricsolve/resultant.hpp>

#include <algorithm>

namespace toricsolve {

namespace {

SparsePoly divexact(const SparsePoly& f, const Int& d) {
  SparsePoly r(f.vars());
  Int q;
  for (const auto& [e, c] : f.terms()) {
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    r.add_term(e, q);
  }
  return r;
}

// Ascending coefficient vector in `var`, padded to the formal degree; all
// other variables must already be specialized.
std::vector<Int> univariate_coeffs(const SparsePoly& f, std::size_t var, std::int64_t formal) {
  std::vector<Int> out(static_cast<std::size_t>(formal) + 1, Int(0));
  for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e[var])] += c;
  return out;
}

struct ResultantJob {
  std::size_t var;
  std::int64_t df, dg;
  std::vector<std::size_t> others;
  std::vector<std::int64_t> bounds;
};

SparsePoly interpolate_resultant(const ResultantJob& job, const SparsePoly& f, const SparsePoly& g,
                                 std::size_t level) {
  if (level == job.others.size()) {
    auto fc = univariate_coeffs(f, job.var, job.df);
    auto gc = univariate_coeffs(g, job.var, job.dg);
    return SparsePoly::constant(f.vars(), det_bareiss(sylvester_matrix(fc, gc)));
  }
  const std::size_t v = job.others[level];
  const std::int64_t d = job.bounds[level];
  // Newton divided differences on the nodes 0..d; every difference is integral.
  std::vector<SparsePoly> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (std::int64_t k = 0; k <= d; ++k)
    c.push_back(interpolate_resultant(job, f.substitute(v, k), g.substitute(v, k), level + 1));
  for (std::int64_t k = 1; k <= d; ++k)
    for (std::int64_t i = d; i >= k; --i) {
      auto& ci = c[static_cast<std::size_t>(i)];
      ci = divexact(ci - c[static_cast<std::size_t>(i - 1)], Int(k));
    }
  const SparsePoly x = SparsePoly::variable(f.vars(), v);
  SparsePoly r = c[static_cast<std::size_t>(d)];
  for (std::int64_t k = d - 1; k >= 0; --k) {
    r = r * x - r * Int(k);
    r += c[static_cast<std::size_t>(k)];
  }
  return r;
}

}  // namespace

SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var) {
  if (f.vars() != g.vars()) throw InputError("resultant of polynomials over different variables");
  if (var >= f.nvars()) throw InputError("resultant variable out of range");
  ResultantJob job;
  job.var = var;
  job.df = f.degree_in(var);
  job.dg = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) return SparsePoly(f.vars());
  if (job.df == 0 && job.dg == 0)
    throw InputError("resultant of two polynomials constant in " + f.vars()[var]);
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    if (v == var) continue;
    const std::int64_t b = job.dg * f.degree_in(v) + job.df * g.degree_in(v);
    if (b == 0) continue;
    job.others.push_back(v);
    job.bounds.push_back(b);
  }
  return interpolate_resultant(job, f, g, 0);
}

SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::string_view var) {
  const auto idx = f.var_index(var);
  if (!idx) throw InputError("unknown variable " + std::string(var));
  return sylvester_resultant(f, g, *idx);
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0 && g.degree() == 0) throw InputError("resultant of two constants");
  return det_rational(sylvester_matrix(f.coeffs(), g.coeffs()));
}

Matrix<Rat> first_subresultant_matrix(const UniPoly& f, const UniPoly& g) {
  const long d1 = f.degree(), d2 = g.degree();
  if (d1 < 2 || d2 < 2) throw InputError("first subresultant needs degrees >= 2");
  const std::size_t rows = static_cast<std::size_t>(d1 + d2 - 2), cols = rows + 1;
  Matrix<Rat> m(rows, std::vector<Rat>(cols, Rat(0)));
  std::size_t r = 0;
  for (long i = 0; i < d1 - 1; ++i, ++r)
    for (long k = 0; k <= d2; ++k) m[r][static_cast<std::size_t>(i + k)] = g.coeff(static_cast<std::size_t>(k));
  for (long i = 0; i < d2 - 1; ++i, ++r)
    for (long k = 0; k <= d1; ++k) m[r][static_cast<std::size_t>(i + k)] = f.coeff(static_cast<std::size_t>(k));
  return m;
}

FirstSubresultant first_subresultant(const UniPoly& f, const UniPoly& g) {
  const auto m = first_subresultant_matrix(f, g);
  const std::size_t cols = m.front().size();
  auto drop = [&](std::size_t col) {
    Matrix<Rat> s = m;
    for (auto& row : s) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    return det_rational(s);
  };
  return {drop(cols - 2), drop(cols - 1)};
}

Rat discriminant(const UniPoly& f) {
  const long D = f.degree();
  if (D < 2) throw InputError("discriminant needs degree >= 2");
  const std::size_t n = static_cast<std::size_t>(2 * D - 1);
  Matrix<Rat> m(n, std::vector<Rat>(n, Rat(0)));
  const UniPoly df = f.derivative();
  std::size_t r = 0;
  for (long i = 0; i < D - 1; ++i, ++r)
    for (long k = 0; k <= D; ++k) m[r][static_cast<std::size_t>(i + k)] = f.coeff(static_cast<std::size_t>(k));
  for (long i = 0; i < D; ++i, ++r)
    for (long k = 0; k < D; ++k) m[r][static_cast<std::size_t>(i + k)] = df.coeff(static_cast<std::size_t>(k));
  Rat sign = ((D * (D - 1) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
  return sign / f.leading() * det_rational(m);
}

SparsePoly strip_extraneous(const SparsePoly& f0, std::size_t keep, std::vector<zpoly::ZPoly>* split) {
  if (f0.is_zero()) return f0;
  SparsePoly f = divexact(f0, f0.content());
  // monomial factor
  Exponents low(f.nvars());
  for (std::size_t v = 0; v < f.nvars(); ++v) low[v] = -f.min_degree_in(v);
  if (split && low[keep] != 0) split->push_back({Int(0), Int(1)});
  f = f.shifted(low);
  // content with respect to every variable except `keep`
  bool only_keep = true;
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (v != keep && f.degree_in(v) > 0) only_keep = false;
  if (!only_keep) {
    std::map<Exponents, zpoly::ZPoly> groups;
    for (const auto& [e, c] : f.terms()) {
      Exponents rest = e;
      rest[keep] = 0;
      auto& z = groups[rest];
      const auto k = static_cast<std::size_t>(e[keep]);
      if (z.size() <= k) z.resize(k + 1);
      z[k] = c;
    }
    zpoly::ZPoly g;
    for (const auto& [rest, z] : groups) {
      g = g.empty() ? zpoly::primitive(z) : zpoly::gcd(g, z);
      if (g.size() == 1) break;
    }
    if (g.size() > 1) {
      if (split) split->push_back(g);
      SparsePoly r(f.vars());
      for (const auto& [rest, z] : groups) {
        const auto q = zpoly::exact_quotient(z, g);
        Exponents e = rest;
        for (std::size_t k = 0; k < q.size(); ++k) {
          e[keep] = static_cast<std::int64_t>(k);
          r.add_term(e, q[k]);
        }
      }
      f = r;
    }
  }
  // sign: positive leading term in graded-lex order
  if (f.terms().begin()->second < 0) f = -f;
  return f;
}

CascadeResult cascade_unired(const PolySystem& F0, const SparsePoly& projection,
                             std::vector<std::string> order) {
  const PolySystem F = F0.without_zeros();
  const std::size_t n = F.nvars();
  if (F.size() != n)
    throw InputError("cascade elimination needs as many polynomials as variables");
  if (order.empty()) order = F.vars();
  if (order.size() != n) throw InputError("elimination order must list every variable once");

  std::vector<std::string> vars = F.vars();
  const auto& pv = projection.vars();
  std::string uname;
  for (const auto& name : pv)
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
      if (!uname.empty()) throw InputError("projection introduces more than one new variable");
      uname = name;
    }
  if (uname.empty()) throw InputError("projection must introduce a new variable");
  vars.push_back(uname);
  const std::size_t u = n;
  const SparsePoly k = projection.with_vars(vars);
  if (k.degree_in(u) == 0) throw InputError("projection does not involve " + uname);
  bool involves_x = false;
  for (std::size_t v = 0; v < n; ++v) involves_x = involves_x || k.degree_in(v) > 0;
  if (!involves_x) throw InputError("projection is degenerate (constant in the system variables)");

  CascadeResult out;
  std::vector<std::size_t> elim;
  for (const auto& name : order) {
    auto it = std::find(vars.begin(), vars.end() - 1, name);
    if (it == vars.end() - 1) throw InputError("unknown variable in elimination order: " + name);
    elim.push_back(static_cast<std::size_t>(it - vars.begin()));
  }

  std::vector<zpoly::ZPoly> split;
  auto record = [&](const std::string& what, const SparsePoly& p) {
    out.stages.push_back({what, p.size(), p.total_degree()});
  };

  std::vector<SparsePoly> layer;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = sylvester_resultant(F[i].with_vars(vars), k, elim[0]);
    if (r.is_zero())
      throw DegenerateError("stage 1: resultant of f" + std::to_string(i + 1) + " vanishes identically");
    r = strip_extraneous(r, u, &split);
    record("res_" + vars[elim[0]] + "(f" + std::to_string(i + 1) + ", projection)", r);
    layer.push_back(std::move(r));
  }
  for (std::size_t s = 1; s < n; ++s) {
    std::vector<SparsePoly> next;
    const auto& last = layer.back();
    for (std::size_t j = 0; j + 1 < layer.size(); ++j) {
      auto r = sylvester_resultant(layer[j], last, elim[s]);
      if (r.is_zero())
        throw DegenerateError("stage " + std::to_string(s + 1) + ": resultant vanishes identically");
      r = strip_extraneous(r, u, &split);
      record("res_" + vars[elim[s]] + "(stage " + std::to_string(s) + " #" + std::to_string(j + 1) + ", #" +
                 std::to_string(layer.size()) + ")",
             r);
      next.push_back(std::move(r));
    }
    layer = std::move(next);
  }
  const SparsePoly& fin = layer.front();
  for (std::size_t v = 0; v < n; ++v)
    if (fin.degree_in(v) > 0) throw DegenerateError("cascade did not eliminate " + vars[v]);
  std::vector<Int> c(static_cast<std::size_t>(fin.degree_in(u)) + 1, Int(0));
  for (const auto& [e, coef] : fin.terms()) c[static_cast<std::size_t>(e[u])] = coef;
  out.coefficients = zpoly::primitive(c);
  out.P = UniPoly::from_ints(out.coefficients);
  // Square-free, pairwise coprime split factors.
  UniPoly acc = UniPoly::constant(1);
  for (const auto& z : split) {
    UniPoly q = square_free_part(UniPoly::from_ints(z));
    q = q / uni_gcd(q, acc);
    if (q.degree() < 1) continue;
    q = q.primitive();
    acc = acc * q;
    out.split_factors.push_back(q);
  }
  std::sort(out.split_factors.begin(), out.split_factors.end(),
            [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
  return out;
}

UniPoly CascadeResult::sound() const {
  UniPoly r = P;
  for (const auto& q : split_factors) r = r * q;
  return r;
}

}  // namespace toricsolve
