#include <toricsolve/prefix.hpp>

#include <algorithm>

namespace toricsolve {

namespace {

void trim(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

long x_degree(const YPoly& f) {
  long d = 0;
  for (const auto& c : f) d = std::max(d, c.degree());
  return d;
}

UniPoly specialize(const YPoly& f, const Rat& x) {
  std::vector<Rat> c;
  for (const auto& k : f) c.push_back(k.eval(x));
  return UniPoly(c);
}

// synthetic division by (y - g); nullopt when the remainder is nonzero
std::optional<YPoly> divide(const YPoly& f, const UniPoly& g) {
  const std::size_t d = f.size() - 1;
  YPoly q(d);
  UniPoly carry;
  for (std::size_t k = d; k >= 1; --k) {
    carry = f[k] + carry * g;
    q[k - 1] = carry;
  }
  if (!(f[0] + carry * g).is_zero()) return std::nullopt;
  return q;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly term = UniPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) term = term * UniPoly::linear_root(xs[j]) * Rat(1 / (xs[i] - xs[j]));
    acc = acc + term;
  }
  return acc;
}

// one root of f in Q[x], if any
std::optional<UniPoly> find_root(const YPoly& f, std::size_t cap, std::size_t& failed) {
  const long e = x_degree(f);
  const std::size_t need = static_cast<std::size_t>(e) + 1, extra = 2;
  std::vector<Rat> xs;
  std::vector<std::vector<Rat>> rts;
  for (long k = 0; xs.size() < need + extra; ++k) {
    const Rat x = k % 2 == 0 ? Rat(k / 2) : Rat(-(k + 1) / 2);
    if (f.back().eval(x) == 0) continue;
    auto r = rational_roots(specialize(f, x));
    if (r.empty()) return std::nullopt;
    xs.push_back(x);
    rts.push_back(std::move(r));
  }
  std::size_t combos = 1;
  for (std::size_t i = 0; i < need; ++i) {
    combos *= rts[i].size();
    if (combos > cap) throw CapExceeded("root-track combinations exceed the cap");
  }
  std::vector<std::size_t> pick(need, 0);
  const std::vector<Rat> px(xs.begin(), xs.begin() + static_cast<long>(need));
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<Rat> py;
    for (std::size_t i = 0; i < need; ++i) py.push_back(rts[i][pick[i]]);
    const UniPoly g = interpolate(px, py);
    bool ok = true;
    for (std::size_t i = need; i < xs.size() && ok; ++i)
      ok = std::binary_search(rts[i].begin(), rts[i].end(), g.eval(xs[i]));
    if (ok) {
      if (divide(f, g)) return g;
      ++failed;
    }
    for (std::size_t i = 0; i < need && ++pick[i] == rts[i].size(); ++i) pick[i] = 0;
  }
  return std::nullopt;
}

Int ceil_rat(const Rat& v) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

bool admissible(const Rat& y, Ring ring, bool include_zero) {
  if (y.get_den() != 1) return false;
  if (ring == Ring::Z) return true;
  return include_zero ? y >= 0 : y >= 1;
}

bool has_y(const SparsePoly& f, const Int& x, Ring ring, const std::optional<std::pair<Int, Int>>& y_range,
           bool include_zero) {
  if (y_range) {
    const Int lo = ring == Ring::Z ? y_range->first : std::max(y_range->first, Int(include_zero ? 0 : 1));
    for (Int y = lo; y <= y_range->second; ++y)
      if (f.eval(std::vector<Int>{x, y}) == 0) return true;
    return false;
  }
  const UniPoly s = specialize(to_ypoly(f), Rat(x));
  if (s.is_zero()) return true;
  for (const auto& y : rational_roots(s))
    if (admissible(y, ring, include_zero)) return true;
  return false;
}

}  // namespace

YPoly to_ypoly(const SparsePoly& f) {
  if (f.nvars() != 2) throw InputError("expected a polynomial in two variables (x, y)");
  std::vector<std::vector<Rat>> c;
  for (const auto& [e, v] : f.terms()) {
    const auto dy = static_cast<std::size_t>(e[1]), dx = static_cast<std::size_t>(e[0]);
    if (c.size() <= dy) c.resize(dy + 1);
    if (c[dy].size() <= dx) c[dy].resize(dx + 1, Rat(0));
    c[dy][dx] += v;
  }
  YPoly out;
  for (auto& k : c) out.emplace_back(k);
  trim(out);
  return out;
}

YRoots poly_roots_in_y(const SparsePoly& f, std::size_t cap) {
  YRoots out;
  out.cofactor = to_ypoly(f);
  while (out.cofactor.size() >= 2) {
    const auto g = find_root(out.cofactor, cap, out.failed_tracks);
    if (!g) break;
    out.cofactor = *divide(out.cofactor, *g);
    out.roots.push_back(*g);
  }
  return out;
}

JSTReport jst_decide(const SparsePoly& f, Ring ring, bool include_zero) {
  JSTReport r;
  r.ring = ring;
  r.include_zero = include_zero;
  if (f.is_zero()) {
    r.trivial = r.condition1 = r.condition3 = r.verdict = true;
    return r;
  }
  auto found = poly_roots_in_y(f);
  r.cofactor = found.cofactor;
  for (auto& g : found.roots) {
    const bool keep = ring == Ring::Z || (g.is_zero() ? include_zero : g.leading() > 0);
    (keep ? r.roots : r.excluded).push_back(std::move(g));
  }
  r.condition1 = !r.roots.empty();

  for (const auto& g : r.roots)
    for (const auto& c : g.coeffs()) mpz_lcm(r.alpha.get_mpz_t(), r.alpha.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& g : r.roots) {
    std::vector<Int> v;
    for (const auto& c : g.coeffs()) v.push_back(Int(c * r.alpha));
    r.g.push_back(std::move(v));
  }
  if (r.alpha > 10'000'000) throw CapExceeded("alpha = " + r.alpha.get_str() + " exceeds the residue cap");
  r.condition3 = r.condition1;
  if (r.condition1) {
    for (Int x = 0; x < r.alpha; ++x) {
      bool covered = false;
      for (const auto& g : r.g) {
        Int v = 0;
        for (std::size_t k = g.size(); k-- > 0;) v = v * x + g[k];
        if (v % r.alpha == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        r.condition3 = false;
        r.cond3_witness = x;
        break;
      }
    }
  }

  if (ring == Ring::N) {
    Rat x0 = 0;
    for (const auto& g : r.roots) {
      Rat s = 0;
      for (const auto& c : g.coeffs()) s += c * c;
      x0 = std::max(x0, s);
    }
    r.x0 = ceil_rat(x0);
    for (Int x = include_zero ? 0 : 1; x <= r.x0; ++x)
      if (!has_y(f, x, ring, std::nullopt, include_zero)) {
        r.condition2 = false;
        r.cond2_witness = x;
        break;
      }
    r.verdict = r.condition1 && r.condition2 && r.condition3;
  } else {
    r.verdict = r.condition1 && r.condition3;
  }
  return r;
}

std::optional<Int> brute_counterexample(const SparsePoly& f, Ring ring, std::pair<Int, Int> x_range,
                                        std::optional<std::pair<Int, Int>> y_range, bool include_zero) {
  for (Int x = x_range.first; x <= x_range.second; ++x)
    if (!has_y(f, x, ring, y_range, include_zero)) return x;
  return std::nullopt;
}

bool brute_forall_exists(const SparsePoly& f, Ring ring, std::pair<Int, Int> x_range,
                         std::optional<std::pair<Int, Int>> y_range, bool include_zero) {
  return !brute_counterexample(f, ring, x_range, y_range, include_zero);
}

}  // namespace toricsolve
