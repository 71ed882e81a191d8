#include "amazing/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace amazing {

namespace {

using Counts = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void validate(const SimulationConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("simulation: trials must be positive");
  if (cfg.steps == 0) throw std::invalid_argument("simulation: steps must be positive");
}

// Runs trial_fn(gen, counts) for every trial, split into contiguous blocks
// over worker threads. Integer counts are summed, so the partition does not
// affect the result.
template <typename TrialFn>
EmpiricalMatrix run_trials(int states, const SimulationConfig& cfg, TrialFn trial_fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(
      cfg.threads, static_cast<unsigned>(std::min<std::uint64_t>(cfg.trials, 1024))));
  std::vector<Counts> partial(workers, Counts::Zero(states, states));
  auto work = [&](unsigned w) {
    const std::uint64_t begin = cfg.trials * w / workers;
    const std::uint64_t end = cfg.trials * (w + 1) / workers;
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 gen = SplitMix64::stream(cfg.seed, t);
      trial_fn(gen, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  EmpiricalMatrix out{Counts::Zero(states, states)};
  for (const Counts& c : partial) out.counts += c;
  return out;
}

int descents(const std::vector<int>& deck) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < deck.size(); ++i) d += deck[i] > deck[i + 1];
  return d;
}

}  // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
}

std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  unsigned __int128 product = static_cast<unsigned __int128>(gen()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(gen()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t EmpiricalMatrix::row_total(Eigen::Index i) const { return counts.row(i).sum(); }

std::uint64_t EmpiricalMatrix::total() const { return counts.sum(); }

Eigen::MatrixXd EmpiricalMatrix::frequencies() const {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(counts.rows(), counts.cols());
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    const std::uint64_t total = row_total(i);
    if (total == 0) continue;
    for (Eigen::Index j = 0; j < counts.cols(); ++j)
      f(i, j) = static_cast<double>(counts(i, j)) / static_cast<double>(total);
  }
  return f;
}

EmpiricalMatrix simulate_shuffle_chain(int n, std::int64_t b, const SimulationConfig& cfg) {
  if (n < 1) throw std::invalid_argument("simulate_shuffle_chain: n must be >= 1");
  if (b < 1) throw std::invalid_argument("simulate_shuffle_chain: b must be >= 1");
  validate(cfg);
  const auto base = static_cast<std::uint64_t>(b);
  return run_trials(n, cfg, [&](SplitMix64& gen, Counts& counts) {
    std::vector<int> deck(n);
    std::iota(deck.begin(), deck.end(), 1);
    for (int i = n - 1; i > 0; --i)
      std::swap(deck[i], deck[uniform_below(gen, static_cast<std::uint64_t>(i) + 1)]);

    std::vector<std::uint64_t> digits(n);
    std::vector<std::uint64_t> offsets(base);
    std::vector<int> outcome(n);
    std::vector<int> next(n);
    int state = descents(deck);
    for (std::uint64_t step = 0; step < cfg.steps; ++step) {
      std::fill(offsets.begin(), offsets.end(), 0);
      for (int p = 0; p < n; ++p) ++offsets[digits[p] = uniform_below(gen, base)];
      std::uint64_t running = 0;
      for (std::uint64_t d = 0; d < base; ++d) {
        const std::uint64_t size = offsets[d];
        offsets[d] = running;
        running += size;
      }
      for (int p = 0; p < n; ++p) outcome[p] = static_cast<int>(++offsets[digits[p]]);
      for (int i = 0; i < n; ++i) next[i] = outcome[deck[i] - 1];
      deck.swap(next);
      const int new_state = descents(deck);
      ++counts(state, new_state);
      state = new_state;
    }
  });
}

EmpiricalMatrix simulate_carries(int n_summands, std::int64_t b, const SimulationConfig& cfg) {
  if (n_summands < 2) throw std::invalid_argument("simulate_carries: need at least 2 summands");
  if (b < 2) throw std::invalid_argument("simulate_carries: base must be >= 2");
  validate(cfg);
  const auto base = static_cast<std::uint64_t>(b);
  return run_trials(n_summands, cfg, [&](SplitMix64& gen, Counts& counts) {
    std::uint64_t carry = 0;
    for (std::uint64_t column = 0; column < cfg.steps; ++column) {
      std::uint64_t sum = carry;
      for (int s = 0; s < n_summands; ++s) sum += uniform_below(gen, base);
      const std::uint64_t next = sum / base;
      ++counts(static_cast<Eigen::Index>(carry), static_cast<Eigen::Index>(next));
      carry = next;
    }
  });
}

std::vector<double> row_tv_distance(const EmpiricalMatrix& empirical,
                                    const RationalMatrix& exact) {
  if (empirical.counts.rows() != exact.rows() || empirical.counts.cols() != exact.cols())
    throw std::invalid_argument("row_tv_distance: shape mismatch");
  const Eigen::MatrixXd freq = empirical.frequencies();
  std::vector<double> tv(static_cast<std::size_t>(exact.rows()), 0.0);
  for (Eigen::Index i = 0; i < exact.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < exact.cols(); ++j)
      sum += std::abs(freq(i, j) - exact(i, j).convert_to<double>());
    tv[static_cast<std::size_t>(i)] = sum / 2;
  }
  return tv;
}

}  // namespace amazing
