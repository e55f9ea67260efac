#include <toricsolve/linalg.hpp>

#include <utility>

namespace toricsolve {

Int det_bareiss(Matrix<Int> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rat det_rational(const Matrix<Rat>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  // Clear denominators row by row, then use Bareiss.
  Matrix<Int> z(n, std::vector<Int>(n));
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("determinant of a non-square matrix");
    Int l = 1;
    for (const auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) z[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    scale *= l;
  }
  Rat r(det_bareiss(std::move(z)), scale);
  r.canonicalize();
  return r;
}

namespace modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 from_int(const Int& v, u64 p) {
  // mpz_fdiv_ui returns the nonnegative residue.
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

const std::vector<u64>& large_primes(std::size_t count) {
  static std::vector<u64> primes;
  if (primes.size() < count) {
    Int candidate = primes.empty() ? Int(u64{1} << 62) : modp::to_int(primes.back());
    while (primes.size() < count) {
      // walk downwards through odd numbers
      candidate -= 1;
      while (!mpz_probab_prime_p(candidate.get_mpz_t(), 30)) candidate -= 1;
      u64 v = 0;
      mpz_export(&v, nullptr, -1, sizeof(u64), 0, 0, candidate.get_mpz_t());
      primes.push_back(v);
    }
  }
  return primes;
}

u64 det(Matrix<u64> a, u64 p) {
  const std::size_t n = a.size();
  u64 d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(a[r], a[k]);
      d = p - d == p ? 0 : (d == 0 ? 0 : p - d);
    }
    d = mul(d, a[k][k], p);
    const u64 inv_pivot = inv(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const u64 f = mul(a[i][k], inv_pivot, p);
      for (std::size_t j = k; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[k][j], p), p);
    }
  }
  return d;
}

std::vector<u64> interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<u64> coef = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      coef[i] = mul(sub(coef[i], coef[i - 1], p), inv(sub(xs[i], xs[i - k], p), p), p);
      if (i == k) break;
    }
  // Expand Newton form to monomial basis.
  std::vector<u64> out(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // out = out * (x - xs[k]) + coef[k]
    std::vector<u64> next(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      next[j + 1] = add(next[j + 1], out[j], p);
      next[j] = sub(next[j], mul(out[j], xs[k], p), p);
    }
    next[0] = add(next[0], coef[k], p);
    out = std::move(next);
  }
  return out;
}

}  // namespace modp

void CrtAccumulator::add(const std::vector<modp::u64>& residues, modp::u64 p) {
  const Int P = modp::to_int(p);
  if (values_.empty()) {
    values_.reserve(residues.size());
    for (auto r : residues) values_.push_back(modp::to_int(r));
    modulus_ = P;
    return;
  }
  if (residues.size() != values_.size()) throw InputError("CRT residue vectors differ in length");
  // x = v + M * ((r - v) * M^{-1} mod p)
  const modp::u64 m_mod_p = modp::from_int(modulus_, p);
  const modp::u64 m_inv = modp::inv(m_mod_p, p);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const modp::u64 v_mod = modp::from_int(values_[i], p);
    const modp::u64 t = modp::mul(modp::sub(residues[i], v_mod, p), m_inv, p);
    values_[i] += modulus_ * modp::to_int(t);
  }
  modulus_ *= P;
}

std::vector<Int> CrtAccumulator::symmetric() const {
  std::vector<Int> out = values_;
  const Int half = modulus_ / 2;
  for (auto& v : out)
    if (v > half) v -= modulus_;
  return out;
}

}  // namespace toricsolve
