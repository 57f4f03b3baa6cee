#pragma once

#include <array>
#include <string>
#include <vector>

#include "rfi/montecarlo.hpp"
#include "rfi/scenario.hpp"

namespace rfi::cli {

inline constexpr std::array<double, 5> kValidationAlphas{2.02, 2.06, 2.1, 2.15, 2.2};
inline constexpr std::array<double, 3> kValidationBsIntensities{50.0, 100.0, 200.0};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Geometry identities, finite-difference CGF cross-checks, and analytic
/// versus Monte Carlo agreement (3 standard errors) on the 5x3
/// (alpha, lambda_bs) grid for both lobes.
std::vector<CheckResult> run_validation(const Scenario& s, const McConfig& mc);

}  // namespace rfi::cli
