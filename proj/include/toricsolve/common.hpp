#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsolve {

using Int = mpz_class;
using Rat = mpq_class;

/// Malformed input: parse failures, bad arguments, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable resource cap (enumeration box, sieve limit, search budget) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction degenerated (identically zero determinant, vanishing resultant, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Floor of log2 |v| + 1, 0 for v = 0.
inline std::size_t bit_length(const Int& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace toricsolve
