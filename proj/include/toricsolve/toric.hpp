#pragma once

#include <toricsolve/linalg.hpp>
#include <toricsolve/poly.hpp>

#include <cstdint>
#include <vector>

namespace toricsolve {

using Support = std::vector<Exponents>;

/// One row of a resultant matrix: x^shift * f_poly spread over the columns.
struct MatrixRow {
  std::size_t poly = 0;
  Exponents shift;
  /// (column, index of the support point whose coefficient sits there)
  std::vector<std::pair<std::size_t, std::size_t>> entries;
};

struct ResultantMatrix {
  enum class Kind { Sylvester, FirstSubresultant, Discriminant, Toric };
  Kind kind = Kind::Toric;
  std::vector<Support> supports;  ///< sorted, duplicate free
  std::vector<Exponents> columns;
  std::vector<MatrixRow> rows;
  std::uint64_t lifting_seed = 0;

  std::size_t size() const { return rows.size(); }
  std::size_t rows_of(std::size_t poly) const;

  /// coeffs[i][k] is the coefficient of supports[i][k] in the i-th polynomial.
  template <class T>
  Matrix<T> instantiate(const std::vector<std::vector<T>>& coeffs, const T& zero) const {
    Matrix<T> m(rows.size(), std::vector<T>(columns.size(), zero));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, k] : rows[r].entries) m[r][c] = coeffs[rows[r].poly][k];
    return m;
  }
};

/// Canny-Emiris matrix for n+1 supports in n variables, built from the mixed
/// subdivision induced by a pseudo-random integer lifting and a tiny generic
/// shift of the Minkowski sum. Rows are x^(p-a) f_i where p lies in a cell
/// whose i-th summand is the vertex a, i the last such index.
ResultantMatrix toric_matrix(const std::vector<Support>& supports, std::uint64_t seed = 1);

Support support_of(const SparsePoly& f);

/// Lowest-order term in s of det(M0 + s M1) over Z/p: (valuation, coefficient).
/// Returns valuation = SIZE_MAX when the determinant vanishes identically.
std::pair<std::size_t, modp::u64> lowest_order_det(const Matrix<modp::u64>& M0, const Matrix<modp::u64>& M1,
                                                  modp::u64 p, std::size_t degree_bound);

struct PertResult {
  UniPoly h;                      ///< exact, not normalized
  std::vector<Int> coefficients;  ///< ascending in u0
  std::size_t s_order = 0;        ///< power of s that was extracted
  std::size_t matrix_size = 0;
  std::size_t last_rows = 0;      ///< rows carrying f_{n+1}, a bound on deg h
  std::size_t primes = 0;
};

/// Pert for a fixed square system F and filling system F*: the lowest-order
/// coefficient in s of det M(F - s F*, u.x - u0), as a polynomial in u0.
/// The matrix is built once; evaluation for different u reuses it.
class PertOperator {
 public:
  PertOperator(const PolySystem& F, const PolySystem& Fstar, std::uint64_t seed = 1);

  PertResult operator()(const std::vector<Int>& u) const;
  const ResultantMatrix& matrix() const { return M_; }

 private:
  std::size_t n_ = 0;
  ResultantMatrix M_;
  std::vector<std::vector<Int>> c_, cstar_;  // coefficients over M_.supports, i < n
};

PertResult pert(const PolySystem& F, const PolySystem& Fstar, const std::vector<Int>& u);

}  // namespace toricsolve
