#include "amazing/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace amazing {

Integer binomial(const Integer& a, std::int64_t k) {
  if (k < 0 || a < 0 || a < k) return Integer(0);
  // C(a, k) = C(a, a - k); iterate over the smaller index when a is small.
  if (a < 2 * k) k = static_cast<std::int64_t>(a - k);
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= a - k + i;
    result /= i;  // exact: result is C(a - k + i, i) here
  }
  return result;
}

Integer binomial(std::int64_t a, std::int64_t k) {
  return binomial(Integer(a), k);
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer superfactorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("superfactorial: negative argument");
  Integer result = 1;
  Integer running = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    running *= m;
    result *= running;
  }
  return result;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 1)
      throw std::invalid_argument("Composition: parts must be positive");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_descent_set(const std::vector<int>& descents,
                                          int weight) {
  if (weight < 0)
    throw std::invalid_argument("Composition: negative weight");
  if (weight == 0) {
    if (!descents.empty())
      throw std::invalid_argument("Composition: descents in weight 0");
    return Composition();
  }
  std::vector<int> parts;
  int previous = 0;
  for (int d : descents) {
    if (d <= previous || d >= weight)
      throw std::invalid_argument("Composition: invalid descent set");
    parts.push_back(d - previous);
    previous = d;
  }
  parts.push_back(weight - previous);
  return Composition(std::move(parts));
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> result;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    result.push_back(sum);
  }
  return result;
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void extend_compositions(int remaining, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    extend_compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions: negative weight");
  std::vector<Composition> out;
  std::vector<int> prefix;
  extend_compositions(n, prefix, out);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images must be a bijection of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative size");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<int> images(p.size());
  for (int i = 1; i <= p.size(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

DescentStatistics descent_statistics(const Permutation& p) {
  DescentStatistics stats;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) stats.descent_set.push_back(i);
  }
  stats.descent_count = static_cast<int>(stats.descent_set.size());
  stats.descent_composition =
      Composition::from_descent_set(stats.descent_set, p.size());
  return stats;
}

int descent_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i < p.size(); ++i) count += p(i) > p(i + 1);
  return count;
}

std::vector<Integer> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_row: negative n");
  if (n == 0) return {};
  std::vector<Integer> row{Integer(1)};
  for (int m = 2; m <= n; ++m) {
    // A(m, k) = k A(m-1, k) + (m - k + 1) A(m-1, k-1)
    std::vector<Integer> next(m);
    for (int k = 1; k <= m; ++k) {
      Integer value = 0;
      if (k <= m - 1) value += k * row[k - 1];
      if (k >= 2) value += (m - k + 1) * row[k - 2];
      next[k - 1] = value;
    }
    row = std::move(next);
  }
  return row;
}

Integer eulerian_number(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::out_of_range("eulerian_number: need 1 <= k <= n");
  return eulerian_row(n)[k - 1];
}

}  // namespace amazing
