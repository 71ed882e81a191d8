#include "amazing/amazing_matrix.hpp"

#include <stdexcept>
#include <string>

#include "amazing/combinatorics.hpp"
#include "amazing/eulerian_algebra.hpp"
#include "amazing/exact_linalg.hpp"

namespace amazing {

namespace {

void require_parameters(int n, std::int64_t b) {
  if (n < 1) throw std::invalid_argument("amazing matrix: n must be >= 1");
  if (b < 1) throw std::invalid_argument("amazing matrix: b must be >= 1");
}

std::string params(int n, std::int64_t b) {
  return "n=" + std::to_string(n) + " b=" + std::to_string(b);
}

Integer power(const Integer& base, int exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace

Integer amazing_entry(int n, std::int64_t b, int i, int j) {
  require_parameters(n, b);
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("amazing_entry: indices must lie in 1..n");
  Integer sum = 0;
  for (int r = 0; r <= j; ++r) {
    const Integer upper = Integer(b) * (j - r) + n - i;
    const Integer term = binomial(n + 1, r) * binomial(upper, n);
    sum += (r % 2) ? -term : term;
  }
  return sum;
}

AmazingMatrix amazing_matrix(int n, std::int64_t b) {
  require_parameters(n, b);
  AmazingMatrix m{n, b, IntegerMatrix(n, n), power(Integer(b), n)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.entries(i - 1, j - 1) = amazing_entry(n, b, i, j);
  return m;
}

RationalVector normalized_row(const AmazingMatrix& m, int i) {
  if (i < 1 || i > m.n) throw std::out_of_range("normalized_row: row out of range");
  RationalVector row(m.n);
  for (int j = 0; j < m.n; ++j) row(j) = Rational(m.entries(i - 1, j), m.normalizer);
  return row;
}

RationalMatrix normalized(const AmazingMatrix& m) {
  RationalMatrix out(m.n, m.n);
  for (int i = 1; i <= m.n; ++i) out.row(i - 1) = normalized_row(m, i).transpose();
  return out;
}

Report verify_spectrum(int n, std::int64_t b) {
  return verify_spectrum(amazing_matrix(n, b));
}

Report verify_spectrum(const AmazingMatrix& m) {
  Report report;
  const RationalMatrix p = to_rational(m.entries);
  const RationalMatrix w = worpitzky_matrix(m.n).entries;
  const RationalMatrix f = foulkes_matrix(m.n).entries;
  Rational eigenvalue = 1;
  for (int k = 1; k <= m.n; ++k) {
    eigenvalue *= m.b;
    const RationalVector lhs = p * w.col(k - 1);
    const bool right_ok = lhs == eigenvalue * w.col(k - 1);
    report.add("right-eigenvector", params(m.n, m.b) + " j=" + std::to_string(k),
               right_ok,
               right_ok ? "" : "P W_j != b^j W_j for eigenvalue " + eigenvalue.str());
    const RationalVector left = (f.row(k - 1) * p).transpose();
    const bool left_ok = left == eigenvalue * f.row(k - 1).transpose();
    report.add("left-eigenvector", params(m.n, m.b) + " i=" + std::to_string(k),
               left_ok,
               left_ok ? "" : "F_i P != b^i F_i for eigenvalue " + eigenvalue.str());
  }
  return report;
}

Report verify_row_sums(const AmazingMatrix& m) {
  Report report;
  for (int i = 0; i < m.n; ++i) {
    const Integer sum = m.entries.row(i).sum();
    report.add("row-sum", params(m.n, m.b) + " i=" + std::to_string(i + 1),
               sum == m.normalizer,
               sum == m.normalizer ? "" : "sum " + sum.str() + " != " + m.normalizer.str());
    bool nonnegative = true;
    for (int j = 0; j < m.n; ++j) nonnegative = nonnegative && m.entries(i, j) >= 0;
    report.add("nonnegative", params(m.n, m.b) + " i=" + std::to_string(i + 1),
               nonnegative, nonnegative ? "" : "negative entry in row");
  }
  return report;
}

RationalVector stationary_distribution(int n) {
  if (n < 1) throw std::invalid_argument("stationary_distribution: n must be >= 1");
  const std::vector<Integer> eulerian = eulerian_row(n);
  const Integer total = factorial(n);
  RationalVector pi(n);
  for (int k = 0; k < n; ++k) pi(k) = Rational(eulerian[k], total);
  return pi;
}

Report verify_stationary(int n, std::int64_t b) {
  return verify_stationary(amazing_matrix(n, b));
}

Report verify_stationary(const AmazingMatrix& m) {
  const RationalVector pi = stationary_distribution(m.n);
  const RationalVector lhs = (pi.transpose() * to_rational(m.entries)).transpose();
  const bool ok = lhs == Rational(m.normalizer) * pi;
  Report report;
  report.add("stationary", params(m.n, m.b), ok, ok ? "" : "pi P != b^n pi");
  return report;
}

Report verify_multiplicativity(int n, std::int64_t b1, std::int64_t b2) {
  return verify_multiplicativity(amazing_matrix(n, b1), amazing_matrix(n, b2),
                                 amazing_matrix(n, b1 * b2));
}

Report verify_multiplicativity(const AmazingMatrix& p1, const AmazingMatrix& p2,
                               const AmazingMatrix& product) {
  if (p1.n != p2.n || p1.n != product.n)
    throw std::invalid_argument("verify_multiplicativity: size mismatch");
  const std::string where = "n=" + std::to_string(p1.n) + " b1=" + std::to_string(p1.b) +
                            " b2=" + std::to_string(p2.b);
  Report report;
  const IntegerMatrix forward = p1.entries * p2.entries;
  const IntegerMatrix backward = p2.entries * p1.entries;
  report.add("multiplicativity", where, forward == product.entries,
             forward == product.entries ? "" : "P(b1) P(b2) != P(b1 b2)");
  report.add("multiplicativity-commuted", where, backward == product.entries,
             backward == product.entries ? "" : "P(b2) P(b1) != P(b1 b2)");
  return report;
}

Integer foulkes_determinant(int n) {
  const Rational det = exact_determinant(foulkes_matrix(n).entries);
  if (denominator(det) != 1)
    throw std::logic_error("foulkes_determinant: non-integral determinant");
  return numerator(det);
}

Integer DescentPolynomial::mass() const {
  Integer total = 0;
  for (const Integer& c : coeffs) total += c;
  return total;
}

DescentPolynomial descent_polynomial(int n, std::int64_t b, int r) {
  if (b < 1) throw std::invalid_argument("descent_polynomial: b must be >= 1");
  if (r < 1) throw std::invalid_argument("descent_polynomial: r must be >= 1");
  return descent_polynomial_for_base(n, power(Integer(b), r));
}

DescentPolynomial descent_polynomial_for_base(int n, const Integer& m) {
  if (n < 1) throw std::invalid_argument("descent_polynomial: n must be >= 1");
  if (m < 1) throw std::invalid_argument("descent_polynomial: base must be >= 1");
  auto coefficient = [&](int k) {
    Integer sum = 0;
    for (int i = 0; i <= k; ++i) {
      const Integer term = binomial(n + 1, i) * binomial(m * (k - i) + n - 1, n);
      sum += (i % 2) ? -term : term;
    }
    return sum;
  };
  if (coefficient(0) != 0)
    throw std::logic_error("descent_polynomial: nonzero constant coefficient");
  DescentPolynomial poly{n, m, {}};
  for (int k = 1; k <= n; ++k) poly.coeffs.push_back(coefficient(k));
  return poly;
}

}  // namespace amazing
