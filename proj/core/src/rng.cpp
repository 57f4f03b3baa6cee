#include "rfi/rng.hpp"

#include <array>

#include "rfi/error.hpp"

namespace rfi {

namespace {

constexpr std::size_t kLogFactorialTable = 1024;

const std::array<double, kLogFactorialTable>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialTable> t{};
    t[0] = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) {
      t[k] = t[k - 1] + std::log(static_cast<double>(k));
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t a = index;
  std::uint64_t b = seed ^ splitmix64(a);
  return splitmix64(b);
}

double log_factorial(std::uint64_t k) noexcept {
  if (k < kLogFactorialTable) return log_factorial_table()[k];
  return std::lgamma(static_cast<double>(k) + 1.0);
}

PoissonSampler::PoissonSampler(double mean) : mean_(mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("invalid_mean", "Poisson mean must be finite and >= 0");
  }
  exp_neg_mean_ = std::exp(-mean);
  if (mean >= kRejectionThreshold) {
    const double root = std::sqrt(mean);
    log_mean_ = std::log(mean);
    b_ = 0.931 + 2.53 * root;
    a_ = -0.059 + 0.02483 * b_;
    log_inv_alpha_ = std::log(1.1239 + 1.1328 / (b_ - 3.4));
    vr_ = 0.9277 - 3.6224 / (b_ - 2.0);
  }
}

}  // namespace rfi
