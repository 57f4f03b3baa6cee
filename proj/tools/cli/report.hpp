#pragma once

#include <json.hpp>

#include "rfi/analytic.hpp"
#include "rfi/geometry.hpp"
#include "rfi/montecarlo.hpp"

namespace rfi::cli {

// JSON views of the core result types. Non-finite numbers become null.
nlohmann::json to_json(const GeometrySummary& g);
nlohmann::json to_json(const CumulantSet& cs, const ThresholdVerdict& verdict);
nlohmann::json to_json(const McEstimate& e);

nlohmann::json finite_or_null(double v);

}  // namespace rfi::cli
