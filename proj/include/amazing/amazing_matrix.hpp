#pragma once

#include <cstdint>
#include <vector>

#include "amazing/report.hpp"
#include "amazing/types.hpp"

namespace amazing {

/// Unnormalized transition matrix of the descent-count chain of repeated
/// b-shuffles (equivalently, of base-b carries with n summands).
/// Entry (i-1, j-1) is P_ij(b); state i means i-1 descents (or carry i-1).
/// Each row sums to `normalizer` = b^n.
struct AmazingMatrix {
  int n = 0;
  std::int64_t b = 0;
  IntegerMatrix entries;
  Integer normalizer;
};

/// P_ij(b) = sum_{r=0}^{j} (-1)^r C(n+1,r) C(n + b(j-r) - i, n), 1 <= i,j <= n.
Integer amazing_entry(int n, std::int64_t b, int i, int j);

AmazingMatrix amazing_matrix(int n, std::int64_t b);

/// Row i (1-based) divided by b^n.
RationalVector normalized_row(const AmazingMatrix& m, int i);
RationalMatrix normalized(const AmazingMatrix& m);

/// P W_j = b^j W_j for every column of the Worpitzky matrix and
/// F_i P = b^i F_i for every row of the Foulkes matrix.
Report verify_spectrum(int n, std::int64_t b);
Report verify_spectrum(const AmazingMatrix& m);

/// Row sums equal b^n and entries are nonnegative.
Report verify_row_sums(const AmazingMatrix& m);

/// (A(n,1), ..., A(n,n)) / n!.
RationalVector stationary_distribution(int n);

/// pi P = b^n pi.
Report verify_stationary(int n, std::int64_t b);
Report verify_stationary(const AmazingMatrix& m);

/// P(b1) P(b2) = P(b1 b2) on unnormalized entries, in both orders.
Report verify_multiplicativity(int n, std::int64_t b1, std::int64_t b2);
Report verify_multiplicativity(const AmazingMatrix& p1, const AmazingMatrix& p2,
                               const AmazingMatrix& product);

/// Exact determinant of the Foulkes matrix.
Integer foulkes_determinant(int n);

/// Descent counts of the outcomes of an m-shuffle, m = b^r, with
/// multiplicity: coeffs[k-1] counts outcomes with k-1 descents.
struct DescentPolynomial {
  int n = 0;
  Integer base;
  std::vector<Integer> coeffs;

  Integer mass() const;
  friend bool operator==(const DescentPolynomial&, const DescentPolynomial&) = default;
};

/// c_k = sum_{i=0}^{k} (-1)^i C(n+1,i) C(m(k-i)+n-1, n), k = 1..n.
DescentPolynomial descent_polynomial(int n, std::int64_t b, int r);
DescentPolynomial descent_polynomial_for_base(int n, const Integer& m);

}  // namespace amazing
