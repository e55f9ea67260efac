#pragma once

#include <toricsolve/poly.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toricsolve {

using u64 = std::uint64_t;

constexpr u64 kSieveCap = 2'000'000'000;
constexpr u64 kBruteCap = 100'000'000;

/// Calls fn(p) for every prime lo <= p <= hi, in increasing order
/// (segmented Eratosthenes, one bit per odd number).
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn, u64 cap = kSieveCap);
std::vector<u64> primes_upto(u64 x, u64 cap = kSieveCap);
std::vector<u64> primes_in(u64 lo, u64 hi, u64 cap = kSieveCap);
u64 prime_count(u64 lo, u64 hi, u64 cap = kSieveCap);

/// Number of common roots of F mod p in (Z/pZ)^n. Univariate systems use
/// deg gcd(f_1, ..., f_m, x^p - x); otherwise points are enumerated and p^n
/// must not exceed `brute_cap`.
u64 count_roots_mod_p(const PolySystem& F, u64 p, u64 brute_cap = kBruteCap);
/// Existence only; enumeration stops at the first root.
bool has_root_mod_p(const PolySystem& F, u64 p, u64 brute_cap = kBruteCap);

struct ScanReport {
  u64 x_max = 0;
  u64 pi = 0;    ///< primes <= x
  u64 pi_F = 0;  ///< primes with a root mod p
  u64 N_F = 0;   ///< roots summed over primes
  std::vector<std::pair<u64, u64>> records;  ///< (p, root count), increasing p
  double seconds = 0;
};

ScanReport scan(const PolySystem& F, u64 x, u64 brute_cap = kBruteCap);
u64 pi_F(const PolySystem& F, u64 x);
u64 N_F(const PolySystem& F, u64 x);

struct IntervalPrimeCheck {
  u64 count = 0;        ///< primes in the open interval (A t^3, A (t+1)^3)
  Int floor_bound = 0;  ///< floor(A t^2 / (12 (log t + log A)))
  bool pass = false;
};

/// Requires A, t > e^5 and A (t+1)^3 within the sieve cap.
IntervalPrimeCheck primes_in_interval_check(u64 A, u64 t, u64 cap = kSieveCap);

struct KoiranVerdict {
  u64 seed = 0;
  std::string rng = "mt19937_64";
  u64 A = 0, t_lo = 0, t_hi = 0;
  u64 t = 0;
  std::optional<u64> prime;
  bool feasible = false;
};

/// Each trial draws t uniformly from [t_lo, t_hi] and declares F feasible iff
/// some prime in [A t^3, A (t+1)^3 - 1] admits a root of F mod p.
std::vector<KoiranVerdict> koiran_simulate(const PolySystem& F, u64 A, u64 t_lo, u64 t_hi, std::size_t trials,
                                           u64 seed, u64 cap = kSieveCap);

}  // namespace toricsolve
