#include "rfi/combinatorics.hpp"

#include <string>

#include "rfi/error.hpp"

namespace rfi {

namespace {

void check_order(int n, int max_order) {
  if (n < 0 || n > max_order) {
    throw DomainError("order_out_of_range",
                      "order " + std::to_string(n) + " outside [0, " +
                          std::to_string(max_order) + "]");
  }
}

const StirlingTable& shared_table() {
  static const StirlingTable table(kMaxExactOrder);
  return table;
}

}  // namespace

StirlingTable::StirlingTable(int max_order) : max_order_(max_order) {
  check_order(max_order, kMaxExactOrder);
  values_.assign(offset(max_order + 1), 0);
  values_[0] = 1;
  for (int n = 1; n <= max_order; ++n) {
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t stay = i < n ? values_[offset(n - 1) + i] : 0;
      const std::uint64_t join = values_[offset(n - 1) + i - 1];
      values_[offset(n) + i] = static_cast<std::uint64_t>(i) * stay + join;
    }
  }
}

std::uint64_t StirlingTable::operator()(int n, int i) const {
  check_order(n, max_order_);
  if (i < 0 || i > n) return 0;
  return values_[offset(n) + i];
}

StirlingTable stirling_table(int max_order) { return StirlingTable(max_order); }

double bell_polynomial(int n, double v) {
  const StirlingTable& s = shared_table();
  check_order(n, s.max_order());
  // Horner from the leading coefficient down.
  double acc = 0.0;
  for (int i = n; i >= 0; --i) {
    acc = acc * v + static_cast<double>(s(n, i));
  }
  return acc;
}

double poisson_raw_moment(int n, double lambda) { return bell_polynomial(n, lambda); }

}  // namespace rfi
