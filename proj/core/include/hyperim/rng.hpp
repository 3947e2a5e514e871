#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace hyperim {

/// SplitMix64 finalizer. Used to expand seeds and to derive sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Derives the seed of a child stream from a parent seed and a path of stream
/// indices, e.g. derive_seed(run_seed, {generation, individual}).
///
/// Each path element is folded in with one SplitMix64 round, so the derivation
/// is a pure function of (seed, path) and does not depend on the order in
/// which streams are requested. Serial and parallel callers therefore see the
/// same numbers.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path) noexcept;

/// xoshiro256** generator with explicit, portable helpers for bounded integers
/// and doubles. The helpers are used instead of <random> distributions because
/// the latter are implementation-defined and would break cross-platform
/// reproducibility of reported fronts.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  /// Generator for the sub-stream identified by (seed, path).
  static Rng stream(std::uint64_t seed,
                    std::initializer_list<std::uint64_t> path) noexcept {
    return Rng(derive_seed(seed, path));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform double in [lo, hi); returns lo without consuming randomness when
  /// lo == hi.
  double uniform(double lo, double hi) noexcept;

  /// True with probability p. p <= 0 and p >= 1 still consume one draw so the
  /// stream position does not depend on the value of p.
  bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t s_[4];
};

}  // namespace hyperim
