#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "rfi/combinatorics.hpp"
#include "rfi/error.hpp"

using namespace rfi;

namespace {

// Counts set partitions of {1..n} into exactly k blocks by enumerating
// restricted growth strings.
std::uint64_t partitions_brute_force(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      a[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

// E[N^n] for N ~ Poisson(lambda) by direct summation; stops once the tail
// bound drops below 1e-13 of the running sum.
double poisson_moment_sum(int n, double lambda) {
  double sum = 0.0;
  double log_pmf = -lambda;
  for (int k = 0;; ++k) {
    if (k > 0) log_pmf += std::log(lambda) - std::log(static_cast<double>(k));
    const double term = std::pow(static_cast<double>(k), n) * std::exp(log_pmf);
    sum += term;
    if (k > lambda + 10 && term < 1e-16 * sum) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("Stirling numbers against partition enumeration") {
  const StirlingTable s = stirling_table(10);
  CHECK(s(3, 2) == 3);
  CHECK(s(4, 2) == 7);
  CHECK(partitions_brute_force(3, 2) == 3);
  CHECK(partitions_brute_force(4, 2) == 7);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK_MESSAGE(s(n, k) == partitions_brute_force(n, k), "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("Stirling table invariants") {
  const StirlingTable s = stirling_table(kMaxExactOrder);
  CHECK(s(0, 0) == 1);
  for (int n = 1; n <= kMaxExactOrder; ++n) {
    CHECK(s(n, 0) == 0);
    CHECK(s(n, n) == 1);
    CHECK(s(n, n + 1) == 0);
    for (int i = 1; i <= n; ++i) {
      CHECK(s(n, i) == static_cast<std::uint64_t>(i) * s(n - 1, i) + s(n - 1, i - 1));
    }
  }
  // S(20, 10) is the largest entry of the table.
  CHECK(s(20, 10) == 5917584964655ULL);
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS((void)stirling_table(21), DomainError);
  CHECK_THROWS_AS((void)stirling_table(-1), DomainError);
  CHECK_THROWS_AS((void)bell_polynomial(21, 1.0), DomainError);
  CHECK_THROWS_AS((void)poisson_raw_moment(-1, 1.0), DomainError);
  const StirlingTable s = stirling_table(5);
  CHECK_THROWS_AS((void)s(6, 1), DomainError);
}

TEST_CASE("Poisson raw moments") {
  CHECK(poisson_raw_moment(0, 3.7) == 1.0);
  CHECK(poisson_raw_moment(1, 3.7) == 3.7);
  CHECK(poisson_raw_moment(2, 50.0) == 2550.0);
  CHECK(poisson_raw_moment(4, 2.0) == 94.0);
  CHECK(poisson_raw_moment(3, 0.0) == 0.0);

  for (double lambda : {0.5, 1.0, 5.0, 50.0}) {
    for (int n = 0; n <= 6; ++n) {
      const double oracle = poisson_moment_sum(n, lambda);
      CHECK_MESSAGE(std::abs(poisson_raw_moment(n, lambda) - oracle) <= 1e-8 * oracle,
                    "n=" << n << " lambda=" << lambda);
    }
  }
}

TEST_CASE("Bell polynomials") {
  CHECK(bell_polynomial(4, 1.0) == 15.0);
  CHECK(bell_polynomial(3, 2.0) == 22.0);
  for (double v : {0.0, 0.3, 7.0}) CHECK(bell_polynomial(0, v) == 1.0);
  // Bell numbers B_0..B_10.
  const double bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell_polynomial(n, 1.0) == bell[n]);
}

TEST_CASE("exponential generating function of the Bell polynomials") {
  constexpr int kTerms = 20;
  for (double v : {0.5, 1.0, 2.5, 5.0}) {
    for (double t : {-0.1, -0.03, 0.01, 0.05, 0.1}) {
      double series = 0.0;
      double tn_over_fact = 1.0;
      for (int n = 0; n <= kTerms; ++n) {
        if (n > 0) tn_over_fact *= t / n;
        series += bell_polynomial(n, v) * tn_over_fact;
      }
      const double closed = std::exp(v * std::expm1(t));
      CHECK(std::abs(series - closed) <= 1e-14 * closed);
    }
  }
}
