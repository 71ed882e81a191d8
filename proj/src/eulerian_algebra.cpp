#include "amazing/eulerian_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace amazing {

namespace {

void require_degree(int n) {
  if (n < 1) throw std::invalid_argument("Eulerian algebra: degree must be >= 1");
}

void require_same_degree(const EulerianElement& u, const EulerianElement& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("Eulerian algebra: degree mismatch");
}

Integer power(std::int64_t base, int exponent) {
  return boost::multiprecision::pow(Integer(base), exponent);
}

}  // namespace

EulerianElement::EulerianElement(RationalVector coords) : coords_(std::move(coords)) {
  require_degree(degree());
}

EulerianElement EulerianElement::zero(int n) {
  require_degree(n);
  return EulerianElement(RationalVector::Zero(n));
}

EulerianElement EulerianElement::unit(int n) {
  require_degree(n);
  return EulerianElement(RationalVector::Ones(n));
}

EulerianElement EulerianElement::idempotent(int n, int k) {
  require_degree(n);
  if (k < 1 || k > n) throw std::out_of_range("idempotent: need 1 <= k <= n");
  RationalVector coords = RationalVector::Zero(n);
  coords(k - 1) = 1;
  return EulerianElement(std::move(coords));
}

EulerianElement operator+(const EulerianElement& u, const EulerianElement& v) {
  require_same_degree(u, v);
  return EulerianElement(u.coords() + v.coords());
}

EulerianElement operator-(const EulerianElement& u, const EulerianElement& v) {
  require_same_degree(u, v);
  return EulerianElement(u.coords() - v.coords());
}

EulerianElement operator*(const Rational& scalar, const EulerianElement& u) {
  return EulerianElement(scalar * u.coords());
}

EulerianElement spow_element(int n, std::int64_t k) {
  require_degree(n);
  if (k < 0) throw std::invalid_argument("spow_element: k must be >= 0");
  RationalVector coords(n);
  for (int i = 1; i <= n; ++i) coords(i - 1) = Rational(power(k, i));
  return EulerianElement(std::move(coords));
}

EulerianElement class_element(int n, int p) {
  require_degree(n);
  if (p < 1 || p > n) throw std::out_of_range("class_element: need 1 <= p <= n");
  EulerianElement result = EulerianElement::zero(n);
  for (int r = 0; r <= p; ++r) {
    // S_n^[0] is zero in positive degree, so r = p contributes nothing.
    Rational coefficient(binomial(n + 1, r));
    if (r % 2) coefficient = -coefficient;
    result = result + coefficient * spow_element(n, p - r);
  }
  return result;
}

EulerianElement internal_product(const EulerianElement& u,
                                 const EulerianElement& v) {
  require_same_degree(u, v);
  return EulerianElement(u.coords().cwiseProduct(v.coords()));
}

Rational pairing(const EulerianElement& u, const EulerianElement& v) {
  require_same_degree(u, v);
  return u.coords().cwiseProduct(v.coords()).sum();
}

std::string_view basis_name(Basis basis) {
  switch (basis) {
    case Basis::E: return "E";
    case Basis::Spow: return "Spow";
    case Basis::A: return "A";
  }
  return "?";
}

BasisMatrix worpitzky_matrix(int n) {
  require_degree(n);
  BasisMatrix w{n, Basis::E, Basis::A, RationalMatrix::Zero(n, n)};
  const Rational inv_factorial = Rational(1) / Rational(factorial(n));
  for (int i = 1; i <= n; ++i) {
    // Coefficients of prod_{m=0}^{n-1} (x + n - i - m), lowest degree first.
    std::vector<Integer> poly{Integer(1)};
    for (int m = 0; m < n; ++m) {
      const Integer c = n - i - m;
      std::vector<Integer> next(poly.size() + 1, Integer(0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += c * poly[d];
        next[d + 1] += poly[d];
      }
      poly = std::move(next);
    }
    if (poly[0] != 0)
      throw std::logic_error("worpitzky_matrix: nonzero constant term");
    for (int j = 1; j <= n; ++j)
      w.entries(i - 1, j - 1) = Rational(poly[j]) * inv_factorial;
  }
  return w;
}

BasisMatrix foulkes_matrix(int n) {
  require_degree(n);
  BasisMatrix f{n, Basis::A, Basis::E, RationalMatrix::Zero(n, n)};
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      Integer sum = 0;
      // r = j contributes 0^i = 0 since i >= 1.
      for (int r = 0; r < j; ++r) {
        const Integer term = binomial(n + 1, r) * power(j - r, i);
        sum += (r % 2) ? -term : term;
      }
      f.entries(i - 1, j - 1) = Rational(sum);
    }
  }
  return f;
}

void SWordExpansion::add(const Composition& word, const Rational& coefficient) {
  if (word.weight() != n_)
    throw std::invalid_argument("SWordExpansion: word has the wrong weight");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SWordExpansion::coefficient(const Composition& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

SWordExpansion operator+(const SWordExpansion& u, const SWordExpansion& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("SWordExpansion: degree mismatch");
  SWordExpansion sum = u;
  for (const auto& [word, c] : v.terms()) sum.add(word, c);
  return sum;
}

namespace {

// Series in S-words of every weight up to a bound.
using WordSeries = std::map<Composition, Rational>;

Composition concatenate(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

WordSeries multiply(const WordSeries& a, const WordSeries& b, int max_weight) {
  WordSeries out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      if (u.weight() + v.weight() > max_weight) continue;
      Rational& slot = out[concatenate(u, v)];
      slot += cu * cv;
    }
  }
  std::erase_if(out, [](const auto& term) { return term.second == 0; });
  return out;
}

// log sigma = sum over nonempty I of (-1)^(l-1)/l S^I, truncated.
WordSeries log_sigma(int max_weight) {
  WordSeries log;
  for (int w = 1; w <= max_weight; ++w) {
    for (const Composition& c : compositions(w)) {
      Rational coefficient(1, c.length());
      if (c.length() % 2 == 0) coefficient = -coefficient;
      log.emplace(c, coefficient);
    }
  }
  return log;
}

}  // namespace

SWordExpansion idempotent_s_expansion(int n, int k) {
  require_degree(n);
  if (k < 1 || k > n)
    throw std::out_of_range("idempotent_s_expansion: need 1 <= k <= n");
  const WordSeries log = log_sigma(n);
  WordSeries power = log;
  for (int e = 2; e <= k; ++e) power = multiply(power, log, n);
  const Rational scale = Rational(1) / Rational(factorial(k));
  SWordExpansion result(n);
  for (const auto& [word, c] : power) {
    if (word.weight() == n) result.add(word, c * scale);
  }
  return result;
}

SWordExpansion spow_s_expansion(int n, std::int64_t k) {
  require_degree(n);
  if (k < 0) throw std::invalid_argument("spow_s_expansion: k must be >= 0");
  SWordExpansion result(n);
  for (const Composition& c : compositions(n))
    result.add(c, Rational(binomial(k, c.length())));
  return result;
}

Integer fundamental_evaluation(const Composition& composition, std::int64_t N) {
  const int n = composition.weight();
  return binomial(N + n - composition.length(), n);
}

}  // namespace amazing
