#pragma once

#include <cstdint>

namespace rfi {

/// Streaming first-to-fourth central moment sums. add() is Welford-style;
/// merge() combines two partial accumulators (Pebay's pairwise formulas), so
/// blocks can be reduced in a fixed order independent of thread count.
class MomentAccumulator {
 public:
  void add(double x) noexcept;
  void merge(const MomentAccumulator& other) noexcept;

  [[nodiscard]] std::uint64_t count() const noexcept { return n_; }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  /// Biased central moments m_r = M_r / n.
  [[nodiscard]] double central_moment(int r) const noexcept;

  // Unbiased cumulant estimators (k-statistics). NaN when n is too small
  // (k2 needs n >= 2, k3 n >= 3, k4 n >= 4).
  [[nodiscard]] double k2() const noexcept;
  [[nodiscard]] double k3() const noexcept;
  [[nodiscard]] double k4() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

}  // namespace rfi
