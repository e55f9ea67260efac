#pragma once

#include <toricsolve/poly.hpp>
#include <toricsolve/toric.hpp>

#include <optional>
#include <vector>

namespace toricsolve {

/// a * b mod m over Q.
UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
/// Inverse of a modulo m, or nullopt when gcd(a, m) is nonconstant.
std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m);
/// f(g_1, ..., g_n) mod m, variables of f in order.
UniPoly compose_mod(const SparsePoly& f, const std::vector<UniPoly>& g, const UniPoly& m);

/// F* with every support equal to {O, e_1..e_n} union the supports of F.
/// Variant 0 uses all coefficients 1; later variants draw small positive
/// coefficients from a seeded generator (used when variant 0 degenerates).
PolySystem fill_system(const PolySystem& F, unsigned variant = 0);

struct UnivariateReduction {
  enum class Case { Under, Square, Over };
  UniPoly h;                ///< primitive, positive leading coefficient
  std::vector<Int> raw;     ///< Pert coefficients before normalization
  std::vector<Int> u;
  Int epsilon = 1;
  Case kind = Case::Square;
  std::vector<Int> mixing;  ///< epsilon_i for m > n
  PolySystem square;        ///< the n x n system actually reduced
  PolySystem fstar;
  unsigned fill_variant = 0;
  Int V_F = 0;
  std::size_t M_F = 0;      ///< toric matrix size
  /// Pert at u - e_i and u + e_i, primitive; filled when n >= 2.
  std::vector<UniPoly> minus, plus;
};

struct ReductionOptions {
  Int first_epsilon = 1;
};

UnivariateReduction univariate_reduction(const PolySystem& F, const ReductionOptions& opts = {});

struct RUR {
  UnivariateReduction base;
  UniPoly h;  ///< square-free part of base.h, primitive
  std::vector<UniPoly> h_i;
  std::vector<Int> a_i;
};

/// Coordinates of the roots as h_i(theta)/a_i over the roots theta of h.
/// Throws DegenerateError when no epsilon in the search range works.
RUR rur(const PolySystem& F);
/// One attempt at a fixed reduction; throws DegenerateError when r_{i,0} is
/// not invertible modulo h.
RUR rur_from(const UnivariateReduction& base);

/// f_j(h_1/a_1, ..., h_n/a_n) == 0 mod h for every j.
bool verify_rur(const PolySystem& F, const RUR& r);

}  // namespace toricsolve
