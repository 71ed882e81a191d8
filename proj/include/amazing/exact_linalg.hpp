#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "amazing/types.hpp"

namespace amazing {

/// Determinant by Gaussian elimination over an exact field. Pivots are
/// chosen as the first nonzero entry in the column; no magnitude pivoting
/// is needed because nothing is rounded.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("exact_determinant: matrix is not square");
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Scalar factor = a(r, col) / a(col, col);
      a.row(r) -= factor * a.row(col);
    }
  }
  return det;
}

/// Solves the square system a x = rhs exactly. Returns nullopt when a is
/// singular.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> exact_solve(
    const Eigen::MatrixBase<DerivedA>& a_in,
    const Eigen::MatrixBase<DerivedB>& rhs) {
  using Scalar = typename DerivedA::Scalar;
  if (a_in.rows() != a_in.cols() || a_in.rows() != rhs.rows())
    throw std::invalid_argument("exact_solve: dimension mismatch");
  const Eigen::Index n = a_in.rows();
  Matrix<Scalar> a(n, n + 1);
  a.leftCols(n) = a_in;
  a.col(n) = rhs;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) a.row(pivot).swap(a.row(col));
    a.row(col) /= Scalar(a(col, col));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(col);
    }
  }
  return Vector<Scalar>(a.col(n));
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
  return true;
}

template <typename Derived>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

}  // namespace amazing
