#pragma once

#include <toricsolve/common.hpp>

#include <mpfr.h>

#include <string>

namespace toricsolve {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Int& v, mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Rat& v, mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval pi(mpfr_prec_t prec = kDefaultPrecision);
  /// e^x for rational x.
  static Interval exp_of(const Rat& x, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return prec_; }
  /// Exact rational value of the upper endpoint.
  Rat upper() const;
  Rat lower() const;
  Rat width() const { return upper() - lower(); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  bool contains(const Rat& v) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval exp() const;
  /// Requires lo > 0.
  Interval log() const;
  /// Requires lo >= 0.
  Interval sqrt() const;
  Interval pow(unsigned long k) const;
  Interval max_with(const Interval& o) const;
  Interval min_with(const Interval& o) const;

  std::string to_string(int digits = 12) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace toricsolve
