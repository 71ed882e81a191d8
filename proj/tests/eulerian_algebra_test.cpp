#include "amazing/eulerian_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "amazing/exact_linalg.hpp"
#include "amazing/verification.hpp"
#include "gtest/gtest.h"

namespace amazing {
namespace {

EulerianElement coords(std::initializer_list<Rational> values) {
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return EulerianElement(v);
}

EulerianElement random_element(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(num(gen), den(gen));
  return EulerianElement(v);
}

TEST(SpowElement, Examples) {
  EXPECT_EQ(spow_element(2, 1), coords({1, 1}));
  EXPECT_EQ(spow_element(2, 2), coords({2, 4}));
  EXPECT_EQ(spow_element(3, 0), EulerianElement::zero(3));
  EXPECT_EQ(spow_element(4, 1), EulerianElement::unit(4));
}

TEST(ClassElement, Examples) {
  EXPECT_EQ(class_element(2, 1), coords({1, 1}));
  EXPECT_EQ(class_element(2, 2), coords({-1, 1}));
  EXPECT_EQ(class_element(1, 1), coords({1}));
  EXPECT_THROW(class_element(3, 0), std::out_of_range);
  EXPECT_THROW(class_element(3, 4), std::out_of_range);
}

TEST(ClassElement, SumIsFactorialTimesTopIdempotentDirection) {
  // sum_p A(n,p) is the sum of all permutations, which is n! E_n^[n].
  for (int n = 1; n <= 8; ++n) {
    EulerianElement sum = EulerianElement::zero(n);
    for (int p = 1; p <= n; ++p) sum = sum + class_element(n, p);
    EXPECT_EQ(sum, Rational(factorial(n)) * EulerianElement::idempotent(n, n)) << n;
  }
}

TEST(InternalProduct, Examples) {
  EXPECT_EQ(internal_product(spow_element(3, 2), spow_element(3, 3)), spow_element(3, 6));
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      const auto p = internal_product(EulerianElement::idempotent(4, k),
                                      EulerianElement::idempotent(4, l));
      EXPECT_EQ(p, k == l ? EulerianElement::idempotent(4, k) : EulerianElement::zero(4));
    }
  const auto u = coords({Rational(1, 2), -3, 7});
  EXPECT_EQ(internal_product(u, EulerianElement::unit(3)), u);
  EXPECT_THROW(internal_product(EulerianElement::unit(2), EulerianElement::unit(3)),
               std::invalid_argument);
}

TEST(InternalProduct, CommutativeAssociative) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 8);
    const auto u = random_element(n, gen);
    const auto v = random_element(n, gen);
    const auto w = random_element(n, gen);
    EXPECT_EQ(internal_product(u, v), internal_product(v, u));
    EXPECT_EQ(internal_product(internal_product(u, v), w),
              internal_product(u, internal_product(v, w)));
  }
}

TEST(InternalProduct, ShuffleMultiplicativity) {
  for (int n = 1; n <= 8; ++n)
    for (int p = 1; p <= 6; ++p)
      for (int q = 1; q <= 6; ++q)
        EXPECT_EQ(internal_product(spow_element(n, p), spow_element(n, q)),
                  spow_element(n, p * q));
}

TEST(Pairing, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= 5; ++i)
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(pairing(spow_element(n, i), EulerianElement::idempotent(n, j)),
                  Rational(boost::multiprecision::pow(Integer(i), j)));
  EXPECT_EQ(pairing(EulerianElement::idempotent(3, 2), EulerianElement::idempotent(3, 2)), 1);
  EXPECT_EQ(pairing(EulerianElement::idempotent(3, 2), EulerianElement::idempotent(3, 1)), 0);
  EXPECT_EQ(pairing(class_element(2, 2), EulerianElement::idempotent(2, 1)), -1);
  EXPECT_THROW(pairing(EulerianElement::unit(1), EulerianElement::unit(2)),
               std::invalid_argument);
}

TEST(Pairing, ShuffleOperatorIsSelfAdjoint) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 8);
    const std::int64_t b = 1 + static_cast<std::int64_t>(gen() % 6);
    const auto u = random_element(n, gen);
    const auto v = random_element(n, gen);
    const auto s = spow_element(n, b);
    EXPECT_EQ(pairing(internal_product(s, u), v), pairing(u, internal_product(s, v)));
  }
}

TEST(WorpitzkyMatrix, SmallCases) {
  const auto w1 = worpitzky_matrix(1);
  EXPECT_EQ(w1.entries.rows(), 1);
  EXPECT_EQ(w1.entries(0, 0), 1);

  const auto w2 = worpitzky_matrix(2);
  EXPECT_EQ(w2.from, Basis::E);
  EXPECT_EQ(w2.to, Basis::A);
  RationalMatrix expected(2, 2);
  expected << Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2);
  EXPECT_EQ(w2.entries, expected);
}

TEST(WorpitzkyMatrix, RowsEvaluateToBinomials) {
  // Row i, read as a polynomial in x, must agree with C(x+n-i, n) at n+1+
  // integer points, which determines a degree-n polynomial.
  for (int n = 1; n <= 10; ++n) {
    const RationalMatrix w = worpitzky_matrix(n).entries;
    for (int i = 1; i <= n; ++i) {
      for (int x = -3; x <= n + 3; ++x) {
        Rational value = 0;
        for (int j = 1; j <= n; ++j)
          value += w(i - 1, j - 1) * Rational(boost::multiprecision::pow(Integer(x), j));
        // C(x+n-i, n) as a polynomial: the falling factorial over n!.
        Integer falling = 1;
        for (int m = 0; m < n; ++m) falling *= Integer(x + n - i - m);
        EXPECT_EQ(value, Rational(falling, factorial(n))) << n << ' ' << i << ' ' << x;
      }
    }
  }
}

TEST(WorpitzkyMatrix, ColumnsExpandIdempotentsOverClasses) {
  const int n = 3;
  const RationalMatrix w = worpitzky_matrix(n).entries;
  for (int j = 1; j <= n; ++j) {
    EulerianElement sum = EulerianElement::zero(n);
    for (int i = 1; i <= n; ++i) sum = sum + w(i - 1, j - 1) * class_element(n, i);
    EXPECT_EQ(sum, EulerianElement::idempotent(n, j));
  }
}

TEST(FoulkesMatrix, SmallCases) {
  const auto f2 = foulkes_matrix(2);
  RationalMatrix expected(2, 2);
  expected << 1, -1, 1, 1;
  EXPECT_EQ(f2.entries, expected);
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(foulkes_matrix(n).entries(i - 1, 0), 1);
}

TEST(FoulkesMatrix, ColumnsAreClassElements) {
  for (int n = 1; n <= 8; ++n) {
    const RationalMatrix f = foulkes_matrix(n).entries;
    for (int j = 1; j <= n; ++j) EXPECT_EQ(RationalVector(f.col(j - 1)), class_element(n, j).coords());
  }
}

TEST(FoulkesMatrix, LastRowIsEulerian) {
  for (int n = 1; n <= 8; ++n) {
    const RationalMatrix f = foulkes_matrix(n).entries;
    for (int j = 1; j <= n; ++j) EXPECT_EQ(f(n - 1, j - 1), Rational(eulerian_number(n, j)));
  }
}

TEST(FoulkesMatrix, InverseOfWorpitzky) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_TRUE(verify_foulkes_worpitzky_inverse(n).passed()) << n;
    EXPECT_TRUE(is_identity(worpitzky_matrix(n).entries * foulkes_matrix(n).entries)) << n;
  }
}

TEST(FoulkesMatrix, WorpitzkyEvaluation) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(verify_worpitzky_evaluation(n, 10).passed()) << n;
}

TEST(ClassElement, Triangularity) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(verify_triangularity(n).passed()) << n;
}

TEST(IdempotentExpansion, Examples) {
  const auto e21 = idempotent_s_expansion(2, 1);
  EXPECT_EQ(e21.terms().size(), 2u);
  EXPECT_EQ(e21.coefficient(Composition({2})), 1);
  EXPECT_EQ(e21.coefficient(Composition({1, 1})), Rational(-1, 2));

  const auto e22 = idempotent_s_expansion(2, 2);
  EXPECT_EQ(e22.terms().size(), 1u);
  EXPECT_EQ(e22.coefficient(Composition({1, 1})), Rational(1, 2));

  EXPECT_THROW(idempotent_s_expansion(3, 4), std::out_of_range);
}

TEST(IdempotentExpansion, SumIsCompleteFunction) {
  for (int n = 1; n <= 7; ++n) {
    SWordExpansion sum(n);
    for (int k = 1; k <= n; ++k) sum = sum + idempotent_s_expansion(n, k);
    SWordExpansion expected(n);
    expected.add(Composition({n}), 1);
    EXPECT_EQ(sum, expected) << n;
  }
}

TEST(IdempotentExpansion, PowersRecoverShuffleElements) {
  // sum_k m^k E_n^[k] = S_n^[m], with the right side from binomial counts.
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 4; ++m) {
      SWordExpansion lhs(n);
      for (int k = 1; k <= n; ++k) {
        const Rational scale(boost::multiprecision::pow(Integer(m), k));
        const SWordExpansion e = idempotent_s_expansion(n, k);
        for (const auto& [word, c] : e.terms()) lhs.add(word, scale * c);
      }
      EXPECT_EQ(lhs, spow_s_expansion(n, m)) << n << ' ' << m;
    }
  }
}

TEST(FundamentalEvaluation, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(fundamental_evaluation(Composition({n}), 1), 1);
  EXPECT_EQ(fundamental_evaluation(Composition({1, 1}), 2), 1);
  EXPECT_EQ(fundamental_evaluation(Composition(), 5), 1);
}

TEST(FundamentalEvaluation, WordCountIdentity) {
  // sum over permutations of F_{Des(sigma)}(N) counts the N^n words.
  for (int n = 1; n <= 6; ++n) {
    for (int N = 1; N <= 5; ++N) {
      std::vector<int> images(n);
      std::iota(images.begin(), images.end(), 1);
      Integer total = 0;
      do {
        total += fundamental_evaluation(
            descent_statistics(Permutation(images)).descent_composition, N);
      } while (std::next_permutation(images.begin(), images.end()));
      EXPECT_EQ(total, boost::multiprecision::pow(Integer(N), n)) << n << ' ' << N;
    }
  }
}

}  // namespace
}  // namespace amazing
