#include "amazing/verification.hpp"

#include <string>

#include "amazing/amazing_matrix.hpp"
#include "amazing/combinatorics.hpp"
#include "amazing/eulerian_algebra.hpp"
#include "amazing/exact_linalg.hpp"
#include "amazing/group_oracle.hpp"

namespace amazing {

namespace {

std::string n_param(int n) { return "n=" + std::to_string(n); }

}  // namespace

Report verify_foulkes_worpitzky_inverse(int n) {
  const RationalMatrix product = foulkes_matrix(n).entries * worpitzky_matrix(n).entries;
  Report report;
  const bool ok = is_identity(product);
  report.add("foulkes-worpitzky-inverse", n_param(n), ok, ok ? "" : "F W != I");
  return report;
}

Report verify_foulkes_determinant(int n) {
  const Integer det = foulkes_determinant(n);
  const Integer expected = superfactorial(n);
  Report report;
  report.add("foulkes-determinant", n_param(n), det == expected,
             det == expected ? "" : "det " + det.str() + " != " + expected.str());
  return report;
}

Report verify_worpitzky_evaluation(int n, int max_x) {
  const RationalMatrix f = foulkes_matrix(n).entries;
  Report report;
  for (int x = 1; x <= max_x; ++x) {
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      Rational sum = 0;
      for (int i = 1; i <= n; ++i) sum += f(k - 1, i - 1) * Rational(binomial(x + n - i, n));
      ok = sum == Rational(boost::multiprecision::pow(Integer(x), k));
    }
    report.add("worpitzky-evaluation", n_param(n) + " x=" + std::to_string(x), ok,
               ok ? "" : "sum_i F(k,i) C(x+n-i,n) != x^k");
  }
  return report;
}

Report verify_triangularity(int n) {
  Report report;
  for (int i = 1; i <= n; ++i) {
    const EulerianElement rest = class_element(n, i) - spow_element(n, i);
    bool ok = false;
    if (i == 1) {
      ok = rest == EulerianElement::zero(n);
    } else {
      // Columns S_n^[m], m = 1..i-1; solve on the first i-1 coordinates and
      // check the remaining ones.
      RationalMatrix basis(n, i - 1);
      for (int m = 1; m < i; ++m) basis.col(m - 1) = spow_element(n, m).coords();
      const auto solution = exact_solve(basis.topRows(i - 1), rest.coords().head(i - 1));
      ok = solution && basis * *solution == rest.coords();
    }
    report.add("triangularity", n_param(n) + " i=" + std::to_string(i), ok,
               ok ? "" : "A(n,i) - S_n^[i] not in span of lower S_n^[m]");
  }
  return report;
}

Report verify_descent_polynomial_oracle(int n, long long b, int r) {
  const DescentPolynomial closed = descent_polynomial(n, b, r);
  const auto m = static_cast<std::int64_t>(closed.base);
  const DescentPolynomial enumerated = oracle_descent_polynomial(n, m);
  Report report;
  report.add("descent-polynomial-oracle",
             n_param(n) + " b=" + std::to_string(b) + " r=" + std::to_string(r),
             closed == enumerated, closed == enumerated ? "" : "closed form differs from enumeration");
  return report;
}

Report verify_descent_polynomial_mass(int n, long long b, int r) {
  const DescentPolynomial poly = descent_polynomial(n, b, r);
  const Integer expected = boost::multiprecision::pow(poly.base, n);
  bool nonnegative = true;
  for (const Integer& c : poly.coeffs) nonnegative = nonnegative && c >= 0;
  Report report;
  const bool ok = poly.mass() == expected && nonnegative;
  report.add("descent-polynomial-mass",
             n_param(n) + " b=" + std::to_string(b) + " r=" + std::to_string(r), ok,
             ok ? "" : "mass " + poly.mass().str() + " expected " + expected.str());
  return report;
}

Report verify_all(int max_n) {
  Report report;
  for (int n = 1; n <= max_n; ++n) {
    for (long long b : {2, 3, 10}) report.append(verify_row_sums(amazing_matrix(n, b)));
    for (long long b : {2, 3, 5}) report.append(verify_spectrum(n, b));
    for (long long b : {2, 3}) report.append(verify_stationary(n, b));
    for (long long b1 = 1; b1 <= 4; ++b1)
      for (long long b2 = b1; b2 <= 4; ++b2) report.append(verify_multiplicativity(n, b1, b2));
    report.append(verify_foulkes_worpitzky_inverse(n));
    report.append(verify_foulkes_determinant(n));
    report.append(verify_worpitzky_evaluation(n, 10));
    report.append(verify_triangularity(n));
    for (long long b = 1; b <= 9; ++b) report.append(verify_descent_polynomial_mass(n, b, 1));
    report.append(verify_descent_polynomial_mass(n, 2, 2));
    report.append(verify_descent_polynomial_mass(n, 2, 3));
    report.append(verify_descent_polynomial_mass(n, 3, 2));

    if (n > kMaxProductDegree) continue;
    for (long long b : {2, 3}) report.append(verify_oracle_transition(n, b));
    report.append(verify_group_idempotents(n));
    for (long long b = 1; b <= 8; ++b) report.append(verify_descent_polynomial_oracle(n, b, 1));
    report.append(verify_descent_polynomial_oracle(n, 2, 2));
    report.append(verify_descent_polynomial_oracle(n, 2, 3));
    for (long long b = 1; b <= 4; ++b) {
      report.append(verify_shuffle_multiset(enumerate_b_shuffles(n, b)));
      report.append(verify_shuffle_element(n, b));
    }
  }
  return report;
}

}  // namespace amazing
