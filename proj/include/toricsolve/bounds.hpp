#pragma once

#include <toricsolve/interval.hpp>
#include <toricsolve/poly.hpp>
#include <toricsolve/unired.hpp>

#include <string>
#include <utility>
#include <vector>

namespace toricsolve {

/// A formula evaluated in outward-rounded interval arithmetic; `value.upper()`
/// is the reported rigorous upper bound.
struct BoundReport {
  std::string name;
  std::string formula;
  std::vector<std::pair<std::string, std::string>> inputs;
  Interval value;

  Rat upper() const { return value.upper(); }
};

/// log|v| as an interval; v must be nonzero.
Interval log_abs(const Int& v, mpfr_prec_t prec = Interval::kDefaultPrecision);
/// log of the largest absolute coefficient of a nonzero integer polynomial.
Interval sigma_of(const std::vector<Int>& coeffs, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Product of the total degrees.
Int bezout_bound(const PolySystem& F);

/// Bound on |coefficient of u0^i| in Pert.
BoundReport growth_bound(const Int& V_F, const Int& M_F, unsigned long i, const Int& c, const Int& cstar,
                         unsigned long mu, const std::vector<Int>& u,
                         mpfr_prec_t prec = Interval::kDefaultPrecision);

struct HeightInputs {
  std::size_t n = 0, m = 0;
  Int V_F = 0, M_F = 0;
  Int c = 0;               ///< largest |coefficient| of F
  unsigned long mu = 0;    ///< largest term count of a single polynomial
};

/// Inputs taken from F and the toric matrix used for its reduction.
HeightInputs height_inputs(const PolySystem& F, const UnivariateReduction& r);

/// Upper bound on sigma(h_F) = log of the largest coefficient; the m > n
/// form is used when m > n.
BoundReport height_bound_hF(const HeightInputs& in, mpfr_prec_t prec = Interval::kDefaultPrecision);
/// Same expression with the projection-weight factor replaced by sqrt 2.
BoundReport size_bound(const HeightInputs& in, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Upper bound on log a_i in a rational univariate representation.
BoundReport rur_denominator_bound(const Int& V_F, const Interval& sigma_h,
                                  mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Number of primes at which an infeasible F can still have a root mod p.
BoundReport aF_bound(std::size_t n, std::size_t m, std::int64_t D, const Int& V_F, const Interval& sigma,
                     mpfr_prec_t prec = Interval::kDefaultPrecision);

struct AFConstants {
  Interval B_F, C_F, D_F;
  Int A_F;
  Int t0 = 4963041;
  /// 1296((1 + log 3)/3 + log 1296), kept for comparison with t0.
  Interval t0_expression;
};

AFConstants AF_constants(const Int& V_F, const Interval& log_disc_g, const Interval& sum_log_ai, std::size_t n,
                         mpfr_prec_t prec = Interval::kDefaultPrecision);

/// sqrt(D+1) 2^D c: coefficient bound for any factor of a degree-D polynomial
/// with coefficients bounded by c.
BoundReport mignotte_bound(unsigned long D, const Int& c, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Upper bound on log|disc g| for the square-free part g (degree D') of a
/// degree-D polynomial with coefficients bounded by c >= 1.
BoundReport disc_bound(unsigned long D, unsigned long Dprime, const Int& c,
                       mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Connected components of the positive real zero set with p + s terms:
/// floor(min{n+1, (s+1)/(s-1)} 2^n s^n V_F) for s > 0, 2^(n-1) V_F for s = 0.
Int components_bound(std::size_t n, const Int& V_F, std::size_t p, std::size_t s);
/// (dns+1)(2dns+1)^n
Int opm_bound(std::size_t d, std::size_t n, std::size_t s);
/// (n+1)^k' 2^(k'(k'-1)/2)
Int khovanski_bound(std::size_t n, std::size_t kprime);

}  // namespace toricsolve
