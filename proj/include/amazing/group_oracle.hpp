#pragma once

// Brute-force ground truth in the group algebra Q[S_n] for small n.
//
// Conventions, fixed once for the whole oracle:
//   * permutations multiply as functions, (p * q)(i) = p(q(i));
//   * the complete word S^I is realized as the sum of all permutations whose
//     descent set is contained in the partial sums of I (so the ribbon R_I is
//     the sum over descent composition exactly I);
//   * a digit word w in {0..b-1}^n cuts the deck into b packets (by digit
//     counts) and riffles them so that position p receives the next card of
//     packet w_p. The outcome sigma_w sends position p to the slot that the
//     stable sort of positions by digit assigns it; its inverse is the stable
//     sort tau_w, which has at most b-1 descents;
//   * one step of the shuffle chain maps a deck sigma to sigma_w * sigma.
//
// With these conventions the shuffle multiset, read through inversion, equals
// the image of S_n^[b]; see shuffle_group_element.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "amazing/amazing_matrix.hpp"
#include "amazing/combinatorics.hpp"
#include "amazing/eulerian_algebra.hpp"
#include "amazing/report.hpp"
#include "amazing/types.hpp"

namespace amazing {

inline constexpr int kMaxRibbonDegree = 8;
inline constexpr int kMaxProductDegree = 6;
inline constexpr std::int64_t kEnumerationBudget = 10'000'000;

/// Raised when an oracle-side identity (lumping, agreement) fails.
class OracleFailure : public std::runtime_error {
 public:
  OracleFailure(std::string identity, std::string parameters, const std::string& detail)
      : std::runtime_error(identity + " [" + parameters + "]: " + detail),
        identity_(std::move(identity)),
        parameters_(std::move(parameters)) {}

  const std::string& identity() const { return identity_; }
  const std::string& parameters() const { return parameters_; }

 private:
  std::string identity_;
  std::string parameters_;
};

/// All permutations of n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Position of p in all_permutations(p.size()).
std::int64_t lexicographic_rank(const Permutation& p);

class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int n);
  /// The identity permutation with coefficient 1.
  static GroupAlgebraElement unit(int n);

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation& p, const Rational& coefficient);
  Rational coefficient(const Permutation& p) const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int n_;
  Terms terms_;
};

GroupAlgebraElement operator+(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement operator-(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement operator*(const Rational& scalar, const GroupAlgebraElement& u);

/// Bilinear extension of the permutation product. Degree at most
/// kMaxProductDegree.
GroupAlgebraElement group_product(const GroupAlgebraElement& u,
                                  const GroupAlgebraElement& v);

/// Sum of the permutations with descent composition exactly I.
GroupAlgebraElement ribbon_sum(const Composition& composition);

/// Sum of the permutations whose descent set lies inside that of I.
GroupAlgebraElement s_word_to_group(const Composition& composition);

GroupAlgebraElement to_group(const SWordExpansion& expansion);

/// E_n^[k] realized in the group algebra, n <= kMaxProductDegree.
GroupAlgebraElement idempotent_group(int n, int k);

/// Outcomes of a GSR b-shuffle of n cards, with multiplicity over the b^n
/// equally likely digit words.
struct ShuffleMultiset {
  int n = 0;
  std::int64_t b = 0;
  std::map<Permutation, Integer> multiplicity;

  Integer total() const;
};

/// Exhaustive enumeration of all b^n digit words. Requires b^n <= budget.
ShuffleMultiset enumerate_b_shuffles(int n, std::int64_t b);

/// sum_sigma multiplicity(sigma) * sigma^{-1}; equals the image of S_n^[b].
GroupAlgebraElement shuffle_group_element(const ShuffleMultiset& shuffles);

/// Support is {sigma : des(sigma^{-1}) <= b-1}, total mass b^n, and each
/// multiplicity equals F_I(b) for I the descent composition of sigma^{-1}.
Report verify_shuffle_multiset(const ShuffleMultiset& shuffles);

/// Descent-count transition matrix of the permutation chain, computed from
/// every representative of every class. Throws OracleFailure when two
/// representatives of one class disagree.
RationalMatrix oracle_transition_matrix(int n, std::int64_t b);

/// Histogram of (descents + 1) over the m-shuffle outcomes.
DescentPolynomial oracle_descent_polynomial(int n, std::int64_t m);

/// Oracle transition matrix equals the normalized amazing matrix.
Report verify_oracle_transition(int n, std::int64_t b);

/// Idempotency, orthogonality and completeness of idempotent_group(n, .).
Report verify_group_idempotents(int n);

/// shuffle_group_element(enumerate_b_shuffles(n,b)) equals to_group(S_n^[b]).
Report verify_shuffle_element(int n, std::int64_t b);

}  // namespace amazing
