#pragma once

#include <toricsolve/common.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricsolve {

using Exponents = std::vector<std::int64_t>;

/// Graded-lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::int64_t total_degree(const Exponents& e);

/// Sparse multivariate polynomial over Z with a fixed, ordered variable list.
///
/// Terms are kept in graded-lex order with no zero coefficients, so two
/// polynomials over the same variables are equal iff their term maps are.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Int, GrlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(std::vector<std::string> vars, const Int& c);
  static SparsePoly variable(std::vector<std::string> vars, std::size_t index);
  static SparsePoly monomial(std::vector<std::string> vars, Exponents e, const Int& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c * x^e to the polynomial, dropping the term if it cancels.
  void add_term(const Exponents& e, const Int& c);
  Int coefficient(const Exponents& e) const;

  /// Zero polynomial has total degree 0.
  std::int64_t total_degree() const;
  std::int64_t degree_in(std::size_t var) const;
  /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
  std::int64_t min_degree_in(std::size_t var) const;
  std::optional<std::size_t> var_index(std::string_view name) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Int& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Int& c) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned k) const;

  Int eval(std::span<const Int> point) const;
  Rat eval(std::span<const Rat> point) const;
  /// Substitutes `value` for variable `var`; the variable stays in the list with degree 0.
  SparsePoly substitute(std::size_t var, const Int& value) const;
  /// Coefficients with respect to `var`: result[k] multiplies var^k (var removed from exponents' weight).
  std::vector<SparsePoly> coefficients_in(std::size_t var) const;
  /// Multiplies by the monomial x^shift (entries may be negative as long as the result stays polynomial).
  SparsePoly shifted(const Exponents& shift) const;
  /// Re-expresses the polynomial over a new variable list; every used variable must exist in it.
  SparsePoly with_vars(const std::vector<std::string>& vars) const;

  Int content() const;
  Int max_abs_coefficient() const;
  std::vector<Exponents> support() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Parses the polynomial grammar: signed decimal integers, identifiers,
/// `*`, `^` with nonnegative integer exponents, `+`/`-`, and parentheses.
SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

struct SystemStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t D = 0;
  std::size_t k = 0;
  Int c_max = 0;  ///< sigma(F) = log c_max (natural log), evaluated lazily
  std::vector<std::int64_t> degrees;
  std::size_t mu = 0;  ///< largest term count of a single polynomial
};

class PolySystem {
 public:
  PolySystem() = default;
  PolySystem(std::vector<std::string> vars, std::vector<SparsePoly> polys);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<SparsePoly>& polys() const { return polys_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return polys_.size(); }
  const SparsePoly& operator[](std::size_t i) const { return polys_[i]; }

  /// Drops identically zero polynomials.
  PolySystem without_zeros() const;

 private:
  std::vector<std::string> vars_;
  std::vector<SparsePoly> polys_;
};

PolySystem parse_system(const std::vector<std::string>& texts, const std::vector<std::string>& vars);
SystemStats system_stats(const PolySystem& F);

bool is_prime(const Int& p);
/// Reduces every coefficient into {0,...,p-1}; vanishing terms are dropped.
PolySystem reduce_mod_p(const PolySystem& F, const Int& p);
SparsePoly reduce_mod_p(const SparsePoly& f, const Int& p);

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly from_ints(const std::vector<Int>& coeffs);
  static UniPoly from_ints(std::initializer_list<long> coeffs);
  static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }
  /// x - r
  static UniPoly linear_root(const Rat& r);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  /// Coprime integer coefficients with positive leading coefficient.
  std::vector<Int> primitive_ints() const;
  UniPoly primitive() const { return from_ints(primitive_ints()); }
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rat& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  /// this(g(t))
  UniPoly compose(const UniPoly& g) const;
  UniPoly pow(unsigned k) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Integer-coefficient helpers shared by the univariate algorithms.
namespace zpoly {
using ZPoly = std::vector<Int>;
void trim(ZPoly& f);
Int content(const ZPoly& f);
/// Primitive part with positive leading coefficient.
ZPoly primitive(ZPoly f);
ZPoly derivative(const ZPoly& f);
/// lc(g)^(deg f - deg g + 1) * f mod g.
ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g);
/// Exact quotient f / g over Z; throws if not exact.
ZPoly exact_quotient(const ZPoly& f, const ZPoly& g);
ZPoly gcd(const ZPoly& f, const ZPoly& g);
int sign_at(const ZPoly& f, const Rat& x);
Int eval(const ZPoly& f, const Int& x);
}  // namespace zpoly

/// gcd over Q, returned primitive with positive leading coefficient.
UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);
UniPoly square_free_part(const UniPoly& f);

/// Endpoint of a real interval: a rational or +-infinity.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
  Rat value;
  static Endpoint neg_inf() { return {Kind::NegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::PosInf, 0}; }
  static Endpoint at(const Rat& v) { return {Kind::Finite, v}; }
};

/// Number of distinct real roots of f in the half-open interval (lo, hi].
std::size_t sturm_count(const UniPoly& f, const Endpoint& lo, const Endpoint& hi);
std::size_t sturm_count(const UniPoly& f);

/// Sorted, distinct rational roots of f.
std::vector<Rat> rational_roots(const UniPoly& f);

}  // namespace toricsolve
