#include "amazing/group_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace amazing {

namespace {

std::string params(int n, std::int64_t b) {
  return "n=" + std::to_string(n) + " b=" + std::to_string(b);
}

void require_degree_at_most(int n, int bound, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
  if (n > bound)
    throw std::out_of_range(std::string(what) + ": degree " + std::to_string(n) +
                            " exceeds oracle bound " + std::to_string(bound));
}

std::int64_t small_factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t rank_of(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) smaller_after += images[j] < images[i];
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

bool is_subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void check_enumeration_budget(int n, std::int64_t b) {
  if (n < 1) throw std::invalid_argument("shuffle enumeration: n must be >= 1");
  if (b < 1) throw std::invalid_argument("shuffle enumeration: b must be >= 1");
  if (boost::multiprecision::pow(Integer(b), n) > kEnumerationBudget)
    throw std::out_of_range("shuffle enumeration: b^n exceeds the enumeration budget");
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw std::invalid_argument("all_permutations: negative degree");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(small_factorial(n)));
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::int64_t lexicographic_rank(const Permutation& p) { return rank_of(p.images()); }

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("GroupAlgebraElement: negative degree");
}

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  GroupAlgebraElement e(n);
  e.add(Permutation::identity(n), Rational(1));
  return e;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& coefficient) {
  if (p.size() != n_)
    throw std::invalid_argument("GroupAlgebraElement: permutation of the wrong degree");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
  GroupAlgebraElement sum = u;
  for (const auto& [p, c] : v.terms()) sum.add(p, c);
  return sum;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  return u + Rational(-1) * v;
}

GroupAlgebraElement operator*(const Rational& scalar, const GroupAlgebraElement& u) {
  GroupAlgebraElement out(u.degree());
  for (const auto& [p, c] : u.terms()) out.add(p, scalar * c);
  return out;
}

GroupAlgebraElement group_product(const GroupAlgebraElement& u,
                                  const GroupAlgebraElement& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("group_product: degree mismatch");
  const int n = u.degree();
  require_degree_at_most(n, kMaxProductDegree, "group_product");

  // Terms sharing a coefficient are multiplied as integer counts first; the
  // elements of interest (descent-class sums) take few distinct values.
  using Classes = std::map<Rational, std::vector<const Permutation*>>;
  auto classes_of = [](const GroupAlgebraElement& x) {
    Classes classes;
    for (const auto& [p, c] : x.terms()) classes[c].push_back(&p);
    return classes;
  };
  const Classes left = classes_of(u);
  const Classes right = classes_of(v);

  const std::size_t order = static_cast<std::size_t>(small_factorial(n));
  std::vector<Rational> accumulated(order, Rational(0));
  std::vector<std::int64_t> counts(order);
  std::vector<int> composed(n);
  for (const auto& [alpha, left_perms] : left) {
    for (const auto& [gamma, right_perms] : right) {
      std::fill(counts.begin(), counts.end(), 0);
      for (const Permutation* sigma : left_perms) {
        for (const Permutation* tau : right_perms) {
          for (int i = 1; i <= n; ++i) composed[i - 1] = (*sigma)((*tau)(i));
          ++counts[static_cast<std::size_t>(rank_of(composed))];
        }
      }
      const Rational weight = alpha * gamma;
      for (std::size_t r = 0; r < order; ++r)
        if (counts[r]) accumulated[r] += weight * counts[r];
    }
  }

  GroupAlgebraElement product(n);
  const std::vector<Permutation> perms = all_permutations(n);
  for (std::size_t r = 0; r < order; ++r) product.add(perms[r], accumulated[r]);
  return product;
}

GroupAlgebraElement ribbon_sum(const Composition& composition) {
  const int n = composition.weight();
  require_degree_at_most(n, kMaxRibbonDegree, "ribbon_sum");
  GroupAlgebraElement out(n);
  for (const Permutation& p : all_permutations(n)) {
    if (descent_statistics(p).descent_composition == composition) out.add(p, Rational(1));
  }
  return out;
}

GroupAlgebraElement s_word_to_group(const Composition& composition) {
  const int n = composition.weight();
  require_degree_at_most(n, kMaxRibbonDegree, "s_word_to_group");
  const std::vector<int> allowed = composition.descent_set();
  GroupAlgebraElement out(n);
  for (const Permutation& p : all_permutations(n)) {
    if (is_subset(descent_statistics(p).descent_set, allowed)) out.add(p, Rational(1));
  }
  return out;
}

GroupAlgebraElement to_group(const SWordExpansion& expansion) {
  const int n = expansion.degree();
  require_degree_at_most(n, kMaxRibbonDegree, "to_group");
  std::vector<std::pair<std::vector<int>, Rational>> words;
  for (const auto& [word, c] : expansion.terms()) words.emplace_back(word.descent_set(), c);
  GroupAlgebraElement out(n);
  for (const Permutation& p : all_permutations(n)) {
    const std::vector<int> descents = descent_statistics(p).descent_set;
    Rational coefficient = 0;
    for (const auto& [allowed, c] : words)
      if (is_subset(descents, allowed)) coefficient += c;
    out.add(p, coefficient);
  }
  return out;
}

GroupAlgebraElement idempotent_group(int n, int k) {
  require_degree_at_most(n, kMaxProductDegree, "idempotent_group");
  return to_group(idempotent_s_expansion(n, k));
}

Integer ShuffleMultiset::total() const {
  Integer sum = 0;
  for (const auto& [p, m] : multiplicity) sum += m;
  return sum;
}

ShuffleMultiset enumerate_b_shuffles(int n, std::int64_t b) {
  check_enumeration_budget(n, b);
  // Dense counters indexed by rank for small n; a map otherwise.
  const bool dense = n <= 9;
  std::vector<std::uint64_t> dense_counts(dense ? small_factorial(n) : 0);
  std::map<std::vector<int>, std::uint64_t> sparse_counts;

  std::vector<std::int64_t> digits(n, 0);
  std::vector<std::int64_t> offsets(b);
  std::vector<int> outcome(n);
  while (true) {
    // Slot of position p in the stable sort of positions by digit.
    std::fill(offsets.begin(), offsets.end(), 0);
    for (int p = 0; p < n; ++p) ++offsets[digits[p]];
    std::int64_t running = 0;
    for (std::int64_t d = 0; d < b; ++d) {
      const std::int64_t size = offsets[d];
      offsets[d] = running;
      running += size;
    }
    for (int p = 0; p < n; ++p) outcome[p] = static_cast<int>(++offsets[digits[p]]);
    if (dense)
      ++dense_counts[static_cast<std::size_t>(rank_of(outcome))];
    else
      ++sparse_counts[outcome];

    int pos = n - 1;
    while (pos >= 0 && digits[pos] == b - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }

  ShuffleMultiset out{n, b, {}};
  if (dense) {
    const std::vector<Permutation> perms = all_permutations(n);
    for (std::size_t r = 0; r < dense_counts.size(); ++r)
      if (dense_counts[r]) out.multiplicity.emplace(perms[r], Integer(dense_counts[r]));
  } else {
    for (const auto& [images, count] : sparse_counts)
      out.multiplicity.emplace(Permutation(images), Integer(count));
  }
  return out;
}

GroupAlgebraElement shuffle_group_element(const ShuffleMultiset& shuffles) {
  GroupAlgebraElement out(shuffles.n);
  for (const auto& [sigma, m] : shuffles.multiplicity) out.add(sigma.inverse(), Rational(m));
  return out;
}

Report verify_shuffle_multiset(const ShuffleMultiset& shuffles) {
  Report report;
  const std::string where = params(shuffles.n, shuffles.b);
  const Integer expected_total = boost::multiprecision::pow(Integer(shuffles.b), shuffles.n);
  report.add("shuffle-mass", where, shuffles.total() == expected_total,
             shuffles.total() == expected_total ? "" : "total " + shuffles.total().str());

  bool multiplicities_ok = true;
  std::string detail;
  for (const auto& [sigma, m] : shuffles.multiplicity) {
    const DescentStatistics inv = descent_statistics(sigma.inverse());
    const Integer expected = fundamental_evaluation(inv.descent_composition, shuffles.b);
    if (inv.descent_count > shuffles.b - 1 || m != expected) {
      multiplicities_ok = false;
      detail = "sigma=" + sigma.str() + " multiplicity " + m.str() + " expected " + expected.str();
      break;
    }
  }
  report.add("shuffle-multiplicity", where, multiplicities_ok, detail);

  if (shuffles.n <= kMaxRibbonDegree) {
    bool support_ok = true;
    std::string missing;
    for (const Permutation& sigma : all_permutations(shuffles.n)) {
      const bool expected = descent_count(sigma.inverse()) <= shuffles.b - 1;
      const bool present = shuffles.multiplicity.contains(sigma);
      if (expected != present) {
        support_ok = false;
        missing = "sigma=" + sigma.str() + (expected ? " missing" : " unexpected");
        break;
      }
    }
    report.add("shuffle-support", where, support_ok, missing);
  }
  return report;
}

RationalMatrix oracle_transition_matrix(int n, std::int64_t b) {
  require_degree_at_most(n, kMaxProductDegree, "oracle_transition_matrix");
  if (n < 1) throw std::invalid_argument("oracle_transition_matrix: n must be >= 1");
  const ShuffleMultiset shuffles = enumerate_b_shuffles(n, b);
  std::vector<std::pair<Permutation, std::uint64_t>> moves;
  for (const auto& [sigma, m] : shuffles.multiplicity)
    moves.emplace_back(sigma, static_cast<std::uint64_t>(m));

  std::vector<std::vector<std::uint64_t>> rows(n);
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> row(n);
  for (const Permutation& deck : all_permutations(n)) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [shuffle, m] : moves) row[descent_count(shuffle * deck)] += m;
    const int state = descent_count(deck);
    if (!seen[state]) {
      rows[state] = row;
      seen[state] = true;
    } else if (rows[state] != row) {
      throw OracleFailure("lumping", params(n, b),
                          "representative " + deck.str() + " of class " +
                              std::to_string(state + 1) + " has a different row");
    }
  }

  const Integer total = shuffles.total();
  RationalMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = Rational(Integer(rows[i][j]), total);
  return out;
}

DescentPolynomial oracle_descent_polynomial(int n, std::int64_t m) {
  const ShuffleMultiset shuffles = enumerate_b_shuffles(n, m);
  DescentPolynomial poly{n, Integer(m), std::vector<Integer>(n, Integer(0))};
  for (const auto& [sigma, mult] : shuffles.multiplicity)
    poly.coeffs[descent_count(sigma)] += mult;
  return poly;
}

Report verify_oracle_transition(int n, std::int64_t b) {
  Report report;
  try {
    const RationalMatrix oracle = oracle_transition_matrix(n, b);
    const RationalMatrix exact = normalized(amazing_matrix(n, b));
    report.add("oracle-transition", params(n, b), oracle == exact,
               oracle == exact ? "" : "enumerated transition matrix differs from P(b)/b^n");
  } catch (const OracleFailure& failure) {
    report.add(failure.identity(), failure.parameters(), false, failure.what());
  }
  return report;
}

Report verify_group_idempotents(int n) {
  require_degree_at_most(n, kMaxProductDegree, "verify_group_idempotents");
  Report report;
  std::vector<GroupAlgebraElement> idempotents;
  for (int k = 1; k <= n; ++k) idempotents.push_back(idempotent_group(n, k));

  GroupAlgebraElement sum(n);
  for (int k = 1; k <= n; ++k) {
    const auto& e = idempotents[k - 1];
    sum = sum + e;
    const bool idempotent = group_product(e, e) == e;
    report.add("idempotent", "n=" + std::to_string(n) + " k=" + std::to_string(k),
               idempotent, idempotent ? "" : "E*E != E");
    for (int l = k + 1; l <= n; ++l) {
      const auto& f = idempotents[l - 1];
      const bool orthogonal = group_product(e, f).is_zero() && group_product(f, e).is_zero();
      report.add("orthogonal",
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                 orthogonal, orthogonal ? "" : "E_k*E_l != 0");
    }
  }
  const bool complete = sum == GroupAlgebraElement::unit(n);
  report.add("idempotent-sum", "n=" + std::to_string(n), complete,
             complete ? "" : "sum of idempotents is not the identity permutation");
  return report;
}

Report verify_shuffle_element(int n, std::int64_t b) {
  Report report;
  const GroupAlgebraElement enumerated = shuffle_group_element(enumerate_b_shuffles(n, b));
  const GroupAlgebraElement algebraic = to_group(spow_s_expansion(n, b));
  report.add("shuffle-element", params(n, b), enumerated == algebraic,
             enumerated == algebraic ? "" : "enumerated shuffle element differs from S_n^[b]");
  return report;
}

}  // namespace amazing
