#pragma once

#include <toricsolve/linalg.hpp>
#include <toricsolve/poly.hpp>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace toricsolve {

/// Sylvester matrix of two coefficient vectors given in ascending order,
/// with formal degrees deg_f = f.size()-1 and deg_g = g.size()-1.
/// Rows: deg_g shifted copies of f, then deg_f shifted copies of g
/// (descending-power columns, the classical layout).
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = f[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = g[dg - k];
  return m;
}

/// Resultant of f and g with respect to `var`, as a polynomial in the
/// remaining variables (over the same variable list).
SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var);
SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::string_view var);
/// Univariate resultant over Q.
Rat resultant(const UniPoly& f, const UniPoly& g);

struct FirstSubresultant {
  Rat R0;
  Rat R1;
};

/// (d1+d2-2) x (d1+d2-1) matrix of d1-1 rows of g followed by d2-1 rows of f
/// (ascending coefficients); R1 drops the last column, R0 the second to last.
Matrix<Rat> first_subresultant_matrix(const UniPoly& f, const UniPoly& g);
FirstSubresultant first_subresultant(const UniPoly& f, const UniPoly& g);

/// (-1)^(D(D-1)/2) / a_D times the (2D-1) x (2D-1) determinant built from
/// D-1 rows of f and D rows of f'.
Rat discriminant(const UniPoly& f);

/// Reports each elimination stage of the cascade.
struct CascadeStage {
  std::string description;
  std::size_t terms = 0;
  std::int64_t total_degree = 0;
};

struct CascadeResult {
  UniPoly P;                     ///< primitive, positive leading coefficient
  std::vector<Int> coefficients;  ///< integer coefficients of P, ascending
  std::vector<CascadeStage> stages;
  /// Factors in u alone (including u itself) split off along the way, square-free
  /// and pairwise distinct. Projections of roots can hide among them.
  std::vector<UniPoly> split_factors;
  /// P times the split factors: vanishes at every projected root.
  UniPoly sound() const;
};

/// Univariate reduction by cascaded Sylvester resultants.
///
/// `projection` is a polynomial in vars + {u} that is linear in u (e.g. u - x*y*z).
/// Each f_i is paired with the projection to eliminate the first variable,
/// then consecutive pairs eliminate the remaining ones in declared order.
/// After each stage the integer content, monomial factors and factors in u
/// alone are removed.
CascadeResult cascade_unired(const PolySystem& F, const SparsePoly& projection,
                             std::vector<std::string> order = {});

/// Removes integer content, monomial factors, and the content with respect to
/// all variables except `keep` (a polynomial in that variable alone). Removed
/// factors in `keep` alone are appended to `split` when given.
SparsePoly strip_extraneous(const SparsePoly& f, std::size_t keep, std::vector<zpoly::ZPoly>* split = nullptr);

}  // namespace toricsolve
