#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "amazing/types.hpp"

namespace amazing {

/// SplitMix64. Small state, so one generator per trial is cheap.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

/// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift with
/// rejection, so results do not depend on the standard library.
std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound);

struct SimulationConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Shuffles per trial (shuffle chain) or digit columns per trial (carries).
  std::uint64_t steps = 1;
  /// Worker threads. Results do not depend on this value.
  unsigned threads = 1;
};

struct EmpiricalMatrix {
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic> counts;

  std::uint64_t row_total(Eigen::Index i) const;
  std::uint64_t total() const;
  /// counts / row totals; rows never visited are all zero.
  Eigen::MatrixXd frequencies() const;
};

/// Each trial deals a uniformly random deck and applies cfg.steps GSR
/// b-shuffles drawn as uniform digit words, recording every transition of the
/// descent count (state index = descents).
EmpiricalMatrix simulate_shuffle_chain(int n, std::int64_t b, const SimulationConfig& cfg);

/// Each trial adds n_summands uniform base-b numbers of cfg.steps digits,
/// least significant first, starting from carry 0, and records every carry
/// transition (state index = carry).
EmpiricalMatrix simulate_carries(int n_summands, std::int64_t b, const SimulationConfig& cfg);

/// Per-row total-variation distance 1/2 sum_j |empirical - exact|.
std::vector<double> row_tv_distance(const EmpiricalMatrix& empirical,
                                    const RationalMatrix& exact);

}  // namespace amazing
