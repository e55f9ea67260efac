#include <toricsolve/arith.hpp>
#include <toricsolve/interval.hpp>
#include <toricsolve/linalg.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace toricsolve {

namespace {

u64 isqrt(u64 x) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::vector<u64> small_primes(u64 x) {
  std::vector<bool> comp(x + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= x; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= x; j += i) comp[j] = true;
  }
  return out;
}

// dense polynomials over Z/p, ascending coefficients, no trailing zeros
using ModPoly = std::vector<u64>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_poly(const SparsePoly& f, u64 p) {
  ModPoly out;
  for (const auto& [e, c] : f.terms()) {
    const auto d = static_cast<std::size_t>(e[0]);
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] = modp::add(out[d], modp::from_int(c, p), p);
  }
  trim(out);
  return out;
}

ModPoly rem(ModPoly a, const ModPoly& b, u64 p) {
  const u64 inv = modp::inv(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = modp::mul(a.back(), inv, p);
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = modp::sub(a[off + i], modp::mul(q, b[i], p), p);
    trim(a);
  }
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = modp::add(c[i + j], modp::mul(a[i], b[j], p), p);
  trim(c);
  return rem(std::move(c), m, p);
}

u64 univariate_roots(const PolySystem& F, u64 p) {
  ModPoly g;
  for (const auto& f : F.polys()) g = gcd(std::move(g), mod_poly(f, p), p);
  if (g.empty()) return p;
  if (g.size() == 1) return 0;
  // x^p mod g
  ModPoly r{1}, b = rem({0, 1}, g, p);
  for (u64 e = p; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, g, p);
    b = mulmod(b, b, g, p);
  }
  if (r.size() < 2) r.resize(2, 0);
  r[1] = modp::sub(r[1], 1, p);
  trim(r);
  return gcd(g, r, p).size() - 1;
}

// enumeration over (Z/p)^n; stops at the first root when `first` is set
u64 brute_roots(const PolySystem& F, u64 p, u64 cap, bool first) {
  const std::size_t n = F.nvars();
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / p) throw CapExceeded("p^n = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the enumeration cap");
    total *= p;
  }
  struct Term {
    u64 c;
    Exponents e;
  };
  std::vector<std::vector<Term>> polys;
  std::int64_t maxdeg = 0;
  for (const auto& f : F.polys()) {
    polys.emplace_back();
    for (const auto& [e, c] : f.terms()) {
      const u64 r = modp::from_int(c, p);
      if (r) polys.back().push_back({r, e});
      for (auto v : e) maxdeg = std::max(maxdeg, v);
    }
  }
  // powers[x][k] = x^k mod p
  std::vector<std::vector<u64>> powers(p, std::vector<u64>(static_cast<std::size_t>(maxdeg) + 1, 1));
  for (u64 x = 0; x < p; ++x)
    for (std::size_t k = 1; k < powers[x].size(); ++k) powers[x][k] = modp::mul(powers[x][k - 1], x, p);
  std::vector<u64> pt(n, 0);
  u64 count = 0;
  for (u64 idx = 0; idx < total; ++idx) {
    bool root = true;
    for (const auto& f : polys) {
      u64 s = 0;
      for (const auto& t : f) {
        u64 v = t.c;
        for (std::size_t i = 0; i < n; ++i)
          if (t.e[i]) v = modp::mul(v, powers[pt[i]][static_cast<std::size_t>(t.e[i])], p);
        s = modp::add(s, v, p);
      }
      if (s) {
        root = false;
        break;
      }
    }
    if (root) {
      ++count;
      if (first) return 1;
    }
    for (std::size_t i = 0; i < n && ++pt[i] == p; ++i) pt[i] = 0;
  }
  return count;
}

}  // namespace

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn, u64 cap) {
  if (hi > cap) throw CapExceeded("sieve limit " + std::to_string(hi) + " exceeds the cap " + std::to_string(cap));
  if (hi < 2 || lo > hi) return;
  if (lo <= 2) fn(2);
  lo = std::max<u64>(lo, 3);
  if (lo % 2 == 0) ++lo;
  if (lo > hi) return;
  const auto base = small_primes(isqrt(hi));
  constexpr u64 kSegment = u64(1) << 20;  // odd numbers per segment
  std::vector<std::uint64_t> bits(kSegment / 64);
  for (u64 start = lo; start <= hi; start += 2 * kSegment) {
    // bit k stands for start + 2k
    const u64 last = std::min(hi, start + 2 * (kSegment - 1));
    const u64 len = (last - start) / 2 + 1;
    std::fill(bits.begin(), bits.end(), 0);
    for (u64 q : base) {
      if (q == 2) continue;
      if (q * q > last) break;
      u64 m = std::max(q * q, (start + q - 1) / q * q);
      if (m % 2 == 0) m += q;
      for (; m <= last; m += 2 * q) {
        const u64 k = (m - start) / 2;
        bits[k >> 6] |= std::uint64_t(1) << (k & 63);
      }
    }
    for (u64 k = 0; k < len; ++k)
      if (!(bits[k >> 6] >> (k & 63) & 1)) {
        const u64 v = start + 2 * k;
        if (v > 1) fn(v);
      }
  }
}

std::vector<u64> primes_upto(u64 x, u64 cap) { return primes_in(2, x, cap); }

std::vector<u64> primes_in(u64 lo, u64 hi, u64 cap) {
  std::vector<u64> out;
  for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); }, cap);
  return out;
}

u64 prime_count(u64 lo, u64 hi, u64 cap) {
  u64 c = 0;
  for_each_prime(lo, hi, [&](u64) { ++c; }, cap);
  return c;
}

u64 count_roots_mod_p(const PolySystem& F, u64 p, u64 brute_cap) {
  if (!is_prime(Int(p))) throw InputError(std::to_string(p) + " is not prime");
  if (F.nvars() == 1) return univariate_roots(F, p);
  return brute_roots(F, p, brute_cap, false);
}

bool has_root_mod_p(const PolySystem& F, u64 p, u64 brute_cap) {
  if (!is_prime(Int(p))) throw InputError(std::to_string(p) + " is not prime");
  if (F.nvars() == 1) return univariate_roots(F, p) > 0;
  return brute_roots(F, p, brute_cap, true) > 0;
}

ScanReport scan(const PolySystem& F, u64 x, u64 brute_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport r;
  r.x_max = x;
  for_each_prime(2, x, [&](u64 p) {
    ++r.pi;
    u64 c;
    try {
      c = count_roots_mod_p(F, p, brute_cap);
    } catch (const CapExceeded& e) {
      throw CapExceeded(std::string(e.what()) + " (at p = " + std::to_string(p) + ")");
    }
    r.records.emplace_back(p, c);
    if (c) ++r.pi_F;
    r.N_F += c;
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

u64 pi_F(const PolySystem& F, u64 x) { return scan(F, x).pi_F; }
u64 N_F(const PolySystem& F, u64 x) { return scan(F, x).N_F; }

IntervalPrimeCheck primes_in_interval_check(u64 A, u64 t, u64 cap) {
  const Interval e5 = Interval::exp_of(5);
  if (Rat(Int(A)) <= e5.upper() || Rat(Int(t)) <= e5.upper())
    throw InputError("primes_in_interval_check needs A, t > e^5");
  const Int lo = Int(A) * Int(t) * t * t, hi = Int(A) * Int(t + 1) * (t + 1) * (t + 1);
  if (hi > Int(cap)) throw CapExceeded("A(t+1)^3 = " + hi.get_str() + " exceeds the sieve cap");
  IntervalPrimeCheck r;
  r.count = prime_count(lo.get_ui() + 1, hi.get_ui() - 1, cap);
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    const Interval v = Interval(Int(Int(A) * t * t), prec) /
                       (Interval(Int(12), prec) * (Interval(Int(t), prec).log() + Interval(Int(A), prec).log()));
    Int a, b;
    const Rat lo_v = v.lower(), hi_v = v.upper();
    mpz_fdiv_q(a.get_mpz_t(), lo_v.get_num_mpz_t(), lo_v.get_den_mpz_t());
    mpz_fdiv_q(b.get_mpz_t(), hi_v.get_num_mpz_t(), hi_v.get_den_mpz_t());
    if (a == b) {
      r.floor_bound = a;
      break;
    }
  }
  r.pass = Int(r.count) >= r.floor_bound;
  return r;
}

std::vector<KoiranVerdict> koiran_simulate(const PolySystem& F, u64 A, u64 t_lo, u64 t_hi, std::size_t trials,
                                           u64 seed, u64 cap) {
  if (t_lo > t_hi || A == 0) throw InputError("koiran_simulate needs A >= 1 and t_lo <= t_hi");
  const Int top = Int(A) * Int(t_hi + 1) * (t_hi + 1) * (t_hi + 1);
  if (top > Int(cap)) throw CapExceeded("A(t_hi+1)^3 = " + top.get_str() + " exceeds the sieve cap");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(t_lo, t_hi);
  std::vector<KoiranVerdict> out;
  for (std::size_t k = 0; k < trials; ++k) {
    KoiranVerdict v;
    v.seed = seed;
    v.A = A;
    v.t_lo = t_lo;
    v.t_hi = t_hi;
    v.t = pick(rng);
    const u64 lo = A * v.t * v.t * v.t, hi = A * (v.t + 1) * (v.t + 1) * (v.t + 1) - 1;
    for (u64 p : primes_in(lo, hi, cap))
      if (has_root_mod_p(F, p)) {
        v.prime = p;
        break;
      }
    v.feasible = v.prime.has_value();
    out.push_back(v);
  }
  return out;
}

}  // namespace toricsolve
