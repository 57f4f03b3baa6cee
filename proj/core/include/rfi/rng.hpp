#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rfi {

/// One SplitMix64 step: advances `state` and returns the mixed output.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed of trial `index` under master seed `seed`:
///   a = splitmix64(index); b = seed ^ a; return splitmix64(b).
/// Trial streams depend only on (seed, index), never on scheduling.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Per-trial random stream: std::mt19937_64 seeded with trial_seed().
/// Both the engine and the uniform mapping are fully specified, so draws are
/// identical across standard libraries.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial_index)
      : engine_(trial_seed(seed, trial_index)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// log(k!) from a table for small k, lgamma beyond.
[[nodiscard]] double log_factorial(std::uint64_t k) noexcept;

/// Poisson variates with a fixed mean. Means below 10 use multiplicative
/// inversion; larger means use Hormann's transformed rejection (PTRS).
class PoissonSampler {
 public:
  explicit PoissonSampler(double mean);

  [[nodiscard]] double mean() const noexcept { return mean_; }

  std::uint64_t operator()(TrialRng& rng) const {
    if (mean_ <= 0.0) return 0;
    return mean_ < kRejectionThreshold ? invert(rng) : reject(rng);
  }

 private:
  static constexpr double kRejectionThreshold = 10.0;

  std::uint64_t invert(TrialRng& rng) const {
    std::uint64_t k = 0;
    double prod = rng.uniform();
    while (prod > exp_neg_mean_) {
      ++k;
      prod *= rng.uniform();
    }
    return k;
  }

  std::uint64_t reject(TrialRng& rng) const {
    for (;;) {
      const double u = rng.uniform() - 0.5;
      const double v = rng.uniform();
      const double us = 0.5 - std::abs(u);
      const double kf = std::floor((2.0 * a_ / us + b_) * u + mean_ + 0.43);
      if (us >= 0.07 && v <= vr_) return static_cast<std::uint64_t>(kf);
      if (kf < 0.0 || (us < 0.013 && v > us)) continue;
      const auto k = static_cast<std::uint64_t>(kf);
      if (std::log(v) + log_inv_alpha_ - std::log(a_ / (us * us) + b_) <=
          -mean_ + kf * log_mean_ - log_factorial(k)) {
        return k;
      }
    }
  }

  double mean_;
  double exp_neg_mean_ = 0.0;
  double log_mean_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double vr_ = 0.0;
  double log_inv_alpha_ = 0.0;
};

}  // namespace rfi
