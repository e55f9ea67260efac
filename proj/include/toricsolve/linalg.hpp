#pragma once

#include <toricsolve/common.hpp>

#include <cstdint>
#include <vector>

namespace toricsolve {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss elimination; exact for integer matrices.
Int det_bareiss(Matrix<Int> a);
Rat det_rational(const Matrix<Rat>& a);

/// Arithmetic modulo a word-size prime.
namespace modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }
u64 from_int(const Int& v, u64 p);
/// Symmetric-free canonical lift in [0, p).
inline Int to_int(u64 v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
  return r;
}

/// Distinct primes just below 2^62, in decreasing order.
const std::vector<u64>& large_primes(std::size_t count);

u64 det(Matrix<u64> a, u64 p);

/// Lagrange interpolation through (xs[i], ys[i]); returns ascending coefficients.
std::vector<u64> interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

}  // namespace modp

/// Chinese remaindering of residues into the symmetric range (-M/2, M/2].
class CrtAccumulator {
 public:
  void add(const std::vector<modp::u64>& residues, modp::u64 p);
  const std::vector<Int>& values() const { return values_; }
  const Int& modulus() const { return modulus_; }
  /// Values lifted into the symmetric range.
  std::vector<Int> symmetric() const;

 private:
  std::vector<Int> values_;
  Int modulus_ = 1;
};

}  // namespace toricsolve
