#include "rfi/stats.hpp"

#include <limits>

namespace rfi {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void MomentAccumulator::add(double x) noexcept {
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
  m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  const double d2 = delta * delta;
  const double d3 = d2 * delta;
  const double d4 = d2 * d2;

  const double m2 = m2_ + other.m2_ + d2 * na * nb / n;
  const double m3 = m3_ + other.m3_ + d3 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * other.m2_ - nb * m2_) / n;
  const double m4 = m4_ + other.m4_ + d4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * d2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * delta * (na * other.m3_ - nb * m3_) / n;

  n_ += other.n_;
  mean_ += delta * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
}

double MomentAccumulator::central_moment(int r) const noexcept {
  if (n_ == 0) return kNaN;
  const double n = static_cast<double>(n_);
  switch (r) {
    case 1: return 0.0;
    case 2: return m2_ / n;
    case 3: return m3_ / n;
    case 4: return m4_ / n;
    default: return kNaN;
  }
}

double MomentAccumulator::k2() const noexcept {
  if (n_ < 2) return kNaN;
  return m2_ / static_cast<double>(n_ - 1);
}

double MomentAccumulator::k3() const noexcept {
  if (n_ < 3) return kNaN;
  const double n = static_cast<double>(n_);
  return n * m3_ / ((n - 1.0) * (n - 2.0));
}

double MomentAccumulator::k4() const noexcept {
  if (n_ < 4) return kNaN;
  const double n = static_cast<double>(n_);
  const double s2 = m2_ / n;
  const double s4 = m4_ / n;
  return n * n * ((n + 1.0) * s4 - 3.0 * (n - 1.0) * s2 * s2) /
         ((n - 1.0) * (n - 2.0) * (n - 3.0));
}

}  // namespace rfi
