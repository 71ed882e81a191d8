#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "amazing/types.hpp"

namespace amazing {

/// Binomial coefficient with the combinatorial convention: zero whenever
/// k > a or a < 0. Negative k also yields zero.
Integer binomial(const Integer& a, std::int64_t k);
Integer binomial(std::int64_t a, std::int64_t k);

Integer factorial(std::int64_t n);

/// 1! 2! ... n!
Integer superfactorial(std::int64_t n);

/// Ordered tuple of positive parts. The empty composition has weight 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// Composition of `weight` whose proper partial sums are `descents`
  /// (each in 1..weight-1, strictly increasing).
  static Composition from_descent_set(const std::vector<int>& descents,
                                      int weight);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// Partial sums, excluding the full weight.
  std::vector<int> descent_set() const;

  /// "1,2,1"; the empty composition renders as "".
  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All compositions of n in lexicographic order of their parts.
std::vector<Composition> compositions(int n);

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);

struct DescentStatistics {
  std::vector<int> descent_set;  // increasing positions i with p(i) > p(i+1)
  int descent_count = 0;
  Composition descent_composition;
};

DescentStatistics descent_statistics(const Permutation& p);
int descent_count(const Permutation& p);

/// Number of permutations of n with k-1 descents, 1 <= k <= n.
Integer eulerian_number(int n, int k);

/// (A(n,1), ..., A(n,n)). Empty for n = 0.
std::vector<Integer> eulerian_row(int n);

}  // namespace amazing
