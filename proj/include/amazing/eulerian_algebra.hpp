#pragma once

#include <map>
#include <string_view>

#include "amazing/combinatorics.hpp"
#include "amazing/types.hpp"

namespace amazing {

/// Element of the degree-n Eulerian subalgebra, stored by its coordinates
/// on the orthogonal idempotents E_n^[1..n]. Coordinate k-1 holds the
/// coefficient of E_n^[k]. The internal product is diagonal in this basis.
class EulerianElement {
 public:
  explicit EulerianElement(RationalVector coords);

  static EulerianElement zero(int n);
  /// S_n = sum of all idempotents; the unit of the internal product.
  static EulerianElement unit(int n);
  /// E_n^[k], 1 <= k <= n.
  static EulerianElement idempotent(int n, int k);

  int degree() const { return static_cast<int>(coords_.size()); }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](int k) const { return coords_(k - 1); }

  friend bool operator==(const EulerianElement& a, const EulerianElement& b) {
    return a.coords_ == b.coords_;
  }

 private:
  RationalVector coords_;
};

EulerianElement operator+(const EulerianElement& u, const EulerianElement& v);
EulerianElement operator-(const EulerianElement& u, const EulerianElement& v);
EulerianElement operator*(const Rational& scalar, const EulerianElement& u);

/// S_n^[k] = sum_i k^i E_n^[i]. k = 0 gives the zero element.
EulerianElement spow_element(int n, std::int64_t k);

/// A(n,p), the sum of ribbons of length p, via the alternating expansion
/// A(n,p) = sum_r (-1)^r C(n+1,r) S_n^[p-r].
EulerianElement class_element(int n, int p);

/// Internal product. Throws std::invalid_argument on degree mismatch.
EulerianElement internal_product(const EulerianElement& u,
                                 const EulerianElement& v);

/// Bilinear form for which the idempotents are orthonormal.
Rational pairing(const EulerianElement& u, const EulerianElement& v);

enum class Basis { E, Spow, A };

std::string_view basis_name(Basis basis);

/// Change-of-basis matrix: column j holds the `to`-coordinates of the j-th
/// `from`-basis vector.
struct BasisMatrix {
  int n = 0;
  Basis from = Basis::E;
  Basis to = Basis::E;
  RationalMatrix entries;
};

/// E -> A. W(i,j) = [x^j] C(x+n-i, n), so E_n^[j] = sum_i W(i,j) A(n,i).
BasisMatrix worpitzky_matrix(int n);

/// A -> E. F(i,j) = sum_{r=0}^{j} (-1)^r C(n+1,r) (j-r)^i.
/// Rows are left eigenvectors of the amazing matrix; F W = I.
BasisMatrix foulkes_matrix(int n);

/// Linear combination of complete-function words S^I, all of weight n.
/// Zero coefficients are never stored.
class SWordExpansion {
 public:
  using Terms = std::map<Composition, Rational>;

  explicit SWordExpansion(int n) : n_(n) {}

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }

  /// Adds `coefficient` to the coefficient of S^I.
  void add(const Composition& word, const Rational& coefficient);
  Rational coefficient(const Composition& word) const;

  friend bool operator==(const SWordExpansion&, const SWordExpansion&) = default;

 private:
  int n_;
  Terms terms_;
};

SWordExpansion operator+(const SWordExpansion& u, const SWordExpansion& v);

/// E_n^[k] as a combination of S-words: the degree-n part of (log sigma)^k / k!,
/// where log sigma = sum_I (-1)^(l(I)-1) / l(I) S^I and words multiply by
/// concatenation.
SWordExpansion idempotent_s_expansion(int n, int k);

/// S_n^[k] = sum_{I, l(I) <= k} C(k, l(I)) S^I.
SWordExpansion spow_s_expansion(int n, std::int64_t k);

/// F_I(N) = C(N + |I| - l(I), |I|).
Integer fundamental_evaluation(const Composition& composition, std::int64_t N);

}  // namespace amazing
