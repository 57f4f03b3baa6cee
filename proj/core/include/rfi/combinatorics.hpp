#pragma once

#include <cstdint>
#include <vector>

namespace rfi {

/// Largest order for which S(n, i) is tabulated exactly in 64-bit integers.
inline constexpr int kMaxExactOrder = 20;

/// Stirling numbers of the second kind S(n, i), 0 <= i <= n <= max_order,
/// built with the additive recurrence S(n, i) = i S(n-1, i) + S(n-1, i-1).
class StirlingTable {
 public:
  /// Throws DomainError("order_out_of_range") unless 0 <= max_order <= 20.
  explicit StirlingTable(int max_order);

  [[nodiscard]] int max_order() const noexcept { return max_order_; }

  /// S(n, i); zero when i > n. Throws on n outside [0, max_order].
  [[nodiscard]] std::uint64_t operator()(int n, int i) const;

 private:
  [[nodiscard]] static std::size_t offset(int n) noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
  }

  int max_order_;
  std::vector<std::uint64_t> values_;  // row-major lower triangle
};

[[nodiscard]] StirlingTable stirling_table(int max_order);

/// Touchard (single-variable Bell) polynomial B_n(v) = sum_i S(n, i) v^i.
[[nodiscard]] double bell_polynomial(int n, double v);

/// Raw moment E[N^n] of N ~ Poisson(lambda); equals bell_polynomial(n, lambda).
[[nodiscard]] double poisson_raw_moment(int n, double lambda);

}  // namespace rfi
