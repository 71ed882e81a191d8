#include "amazing/amazing_matrix.hpp"

#include "amazing/combinatorics.hpp"
#include "amazing/eulerian_algebra.hpp"
#include "amazing/exact_linalg.hpp"
#include "gtest/gtest.h"

namespace amazing {
namespace {

IntegerMatrix integer_matrix(int n, std::initializer_list<long> values) {
  IntegerMatrix m(n, n);
  auto it = values.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Integer(*it++);
  return m;
}

TEST(AmazingEntry, SmallMatrices) {
  EXPECT_EQ(amazing_matrix(2, 2).entries, integer_matrix(2, {3, 1, 1, 3}));
  EXPECT_EQ(amazing_matrix(3, 2).entries, integer_matrix(3, {4, 4, 0, 1, 6, 1, 0, 4, 4}));
  // Frozen from an independent evaluation of the digit-word enumeration.
  EXPECT_EQ(amazing_matrix(4, 2).entries,
            integer_matrix(4, {5, 10, 1, 0, 1, 10, 5, 0, 0, 5, 10, 1, 0, 1, 10, 5}));
  for (long b = 1; b <= 12; ++b) EXPECT_EQ(amazing_entry(1, b, 1, 1), b);
}

TEST(AmazingEntry, IndexErrors) {
  EXPECT_THROW(amazing_entry(3, 2, 0, 1), std::out_of_range);
  EXPECT_THROW(amazing_entry(3, 2, 1, 4), std::out_of_range);
  EXPECT_THROW(amazing_matrix(0, 2), std::invalid_argument);
  EXPECT_THROW(amazing_matrix(3, 0), std::invalid_argument);
}

TEST(AmazingMatrix, Normalized) {
  const RationalMatrix p = normalized(amazing_matrix(2, 2));
  RationalMatrix expected(2, 2);
  expected << Rational(3, 4), Rational(1, 4), Rational(1, 4), Rational(3, 4);
  EXPECT_EQ(p, expected);
  for (int n = 1; n <= 6; ++n) {
    const AmazingMatrix m = amazing_matrix(n, 5);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(normalized_row(m, i).sum(), 1);
  }
  EXPECT_THROW(normalized_row(amazing_matrix(2, 2), 3), std::out_of_range);
}

TEST(AmazingMatrix, OneShuffleIsIdentity) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(is_identity(amazing_matrix(n, 1).entries)) << n;
}

TEST(AmazingMatrix, RowSumsAndNonnegativity) {
  const IntegerMatrix m = amazing_matrix(3, 2).entries;
  EXPECT_EQ(m.rowwise().sum(), IntegerVector::Constant(3, Integer(8)));
  for (int n = 1; n <= 12; ++n) {
    for (long b : {2, 3, 10}) EXPECT_TRUE(verify_row_sums(amazing_matrix(n, b)).passed());
    for (long b = 1; b <= 10; ++b) {
      const AmazingMatrix m = amazing_matrix(n, b);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_GE(m.entries(i, j), 0);
    }
  }
}

TEST(Spectrum, HandChecks) {
  const RationalMatrix p = to_rational(amazing_matrix(2, 2).entries);
  RationalVector right(2);
  right << Rational(1, 2), Rational(-1, 2);
  EXPECT_EQ(RationalVector(p * right), Rational(2) * right);
  RowVector<Rational> left(2);
  left << 1, 1;
  EXPECT_EQ(RowVector<Rational>(left * p), Rational(4) * left);
  for (long b = 1; b <= 5; ++b) EXPECT_TRUE(verify_spectrum(1, b).passed());
}

TEST(Spectrum, HoldsExactly) {
  for (int n = 1; n <= 10; ++n)
    for (long b : {2, 3, 5}) {
      const Report r = verify_spectrum(n, b);
      EXPECT_TRUE(r.passed()) << n << ' ' << b;
      EXPECT_EQ(r.checks.size(), static_cast<std::size_t>(2 * n));
    }
}

TEST(Spectrum, DetectsPerturbation) {
  AmazingMatrix m = amazing_matrix(4, 3);
  m.entries(1, 2) += 1;
  m.entries(1, 1) -= 1;  // keep the row sum
  const Report r = verify_spectrum(m);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.failures(), 0u);
  EXPECT_TRUE(verify_row_sums(m).passed());
  EXPECT_FALSE(verify_stationary(m).passed());
}

TEST(Stationary, Values) {
  RationalVector two(2);
  two << Rational(1, 2), Rational(1, 2);
  EXPECT_EQ(stationary_distribution(2), two);
  RationalVector three(3);
  three << Rational(1, 6), Rational(4, 6), Rational(1, 6);
  EXPECT_EQ(stationary_distribution(3), three);
  EXPECT_EQ(stationary_distribution(1), RationalVector::Ones(1));
  for (int n = 1; n <= 10; ++n)
    for (long b : {2, 3}) EXPECT_TRUE(verify_stationary(n, b).passed()) << n << ' ' << b;
}

TEST(Multiplicativity, Examples) {
  const IntegerMatrix p2 = amazing_matrix(2, 2).entries;
  EXPECT_EQ(IntegerMatrix(p2 * p2), integer_matrix(2, {10, 6, 6, 10}));
  EXPECT_EQ(amazing_matrix(2, 4).entries, integer_matrix(2, {10, 6, 6, 10}));
  for (int n = 1; n <= 6; ++n) {
    const IntegerMatrix p = amazing_matrix(n, 7).entries;
    EXPECT_EQ(IntegerMatrix(p * amazing_matrix(n, 1).entries), p);
  }
  EXPECT_TRUE(verify_multiplicativity(3, 2, 3).passed());
}

TEST(Multiplicativity, Grid) {
  for (int n = 1; n <= 8; ++n)
    for (long b1 = 1; b1 <= 4; ++b1)
      for (long b2 = 1; b2 <= 4; ++b2)
        EXPECT_TRUE(verify_multiplicativity(n, b1, b2).passed()) << n << ' ' << b1 << ' ' << b2;
}

TEST(Multiplicativity, DetectsPerturbation) {
  AmazingMatrix p6 = amazing_matrix(3, 6);
  p6.entries(0, 0) += 1;
  EXPECT_FALSE(verify_multiplicativity(amazing_matrix(3, 2), amazing_matrix(3, 3), p6).passed());
}

TEST(FoulkesDeterminant, Values) {
  EXPECT_EQ(foulkes_determinant(1), 1);
  EXPECT_EQ(foulkes_determinant(2), 2);
  EXPECT_EQ(foulkes_determinant(4), 288);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(foulkes_determinant(n), superfactorial(n)) << n;
}

TEST(ExactDeterminant, VandermondeAndSingular) {
  // det (i^j) over i,j = 1..n is the superfactorial as well.
  for (int n = 1; n <= 7; ++n) {
    RationalMatrix g(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) g(i - 1, j - 1) = Rational(boost::multiprecision::pow(Integer(i), j));
    EXPECT_EQ(exact_determinant(g), Rational(superfactorial(n)));
  }
  RationalMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  EXPECT_EQ(exact_determinant(singular), 0);
  EXPECT_FALSE(exact_solve(singular, RationalVector::Ones(2)).has_value());
  RationalMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_EQ(exact_determinant(swap), -1);
}

TEST(DescentPolynomial, Examples) {
  const auto p = descent_polynomial(2, 2, 1);
  EXPECT_EQ(p.coeffs, (std::vector<Integer>{3, 1}));
  EXPECT_EQ(p.base, 2);
  EXPECT_EQ(descent_polynomial(1, 3, 1).coeffs, (std::vector<Integer>{3}));
  const auto q = descent_polynomial(2, 2, 2);
  EXPECT_EQ(q.mass(), 16);
  EXPECT_EQ(q.coeffs, (std::vector<Integer>{10, 6}));
  EXPECT_THROW(descent_polynomial(2, 2, 0), std::invalid_argument);
}

TEST(DescentPolynomial, Mass) {
  for (int n = 1; n <= 8; ++n)
    for (long m = 1; m <= 9; ++m) {
      const auto p = descent_polynomial_for_base(n, Integer(m));
      EXPECT_EQ(p.mass(), boost::multiprecision::pow(Integer(m), n));
      for (const auto& c : p.coeffs) EXPECT_GE(c, 0);
    }
}

TEST(DescentPolynomial, FirstRowOfAmazingMatrix) {
  // From the identity deck, one m-shuffle lands in class k with weight c_k,
  // which is row 1 of P(m).
  for (int n = 1; n <= 8; ++n)
    for (long m = 1; m <= 6; ++m) {
      const auto p = descent_polynomial_for_base(n, Integer(m));
      const AmazingMatrix a = amazing_matrix(n, m);
      for (int k = 1; k <= n; ++k) EXPECT_EQ(p.coeffs[k - 1], a.entries(0, k - 1));
    }
}

}  // namespace
}  // namespace amazing
