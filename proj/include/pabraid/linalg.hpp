#pragma once

#include "pabraid/numeric.hpp"
#include "pabraid/poly.hpp"
#include "pabraid/spectral.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <json.hpp>

namespace pabraid {

/// Square integer matrix acting on column vectors by left multiplication.
/// Column j holds the image of basis vector j, so entry (i, j) is the
/// coefficient of v_i in the image of v_j.
class IntMatrix {
 public:
  /// Zero matrix; dim must be >= 1.
  explicit IntMatrix(std::size_t dim);
  /// Row-major nested rows.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Integer& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  bool is_nonnegative() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
};

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);

/// Exact determinant by fraction-free Bareiss elimination.
Integer determinant(IntMatrix m);

/// det(tI - M), recovered from exact determinants at t = 0..dim by Lagrange
/// interpolation over Q.
IntPolynomial char_poly(const IntMatrix& m);

/// Strong connectivity of the graph with an edge i -> j whenever M(i, j) != 0.
bool is_irreducible(const IntMatrix& m);

/// Perron-Frobenius eigenvalue of a nonnegative irreducible matrix, by power
/// iteration on I + M with Collatz-Wielandt bounds. The bounds are evaluated
/// exactly at the final iterate, so [lower, upper] is rigorous; `certified`
/// stays false because no polynomial sign change is involved.
/// Throws std::invalid_argument for signed or reducible input.
RootEnclosure perron_root(const IntMatrix& m, double tol);

// {"dim": d, "entries": [[row-major integers]]}; column j = image of v_j.
nlohmann::ordered_json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace pabraid
