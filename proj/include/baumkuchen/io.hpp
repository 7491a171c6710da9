#pragma once

#include "baumkuchen/oracle.hpp"
#include "baumkuchen/partition.hpp"
#include "baumkuchen/theorems.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace baumkuchen {

using Json = nlohmann::ordered_json;

/// Fields of a configuration file. Any subset may be present; the CLI fills
/// the rest from flags or defaults.
struct ConfigFields {
    std::optional<Point> center;
    std::optional<double> outer_radius;
    std::optional<double> inner_radius;
    std::optional<Point> point;
    std::optional<int> cuts;
    std::optional<double> phase;
};

/// Parses {center:[x,y], outer_radius, inner_radius, point:[x,y], cuts, phase}.
/// Unknown keys and wrongly typed values throw Error(invalid_argument).
[[nodiscard]] ConfigFields parse_config_json(const std::string& text);

[[nodiscard]] Json to_json(Point p);
[[nodiscard]] Json to_json(const BaumkuchenConfig& cfg);
[[nodiscard]] Json to_json(const VerificationReport& report);

/// Wedge arrays with 1-based labels; `clockwise` only changes the labels.
[[nodiscard]] Json partition_json(const BaumkuchenConfig& cfg, const FanPartition& fan, bool clockwise = false);

[[nodiscard]] Json pizza_json(const DiskFanConfig& disk, const PizzaAssignment& assignment);

[[nodiscard]] Json to_json(const McEstimate& estimate);

} // namespace baumkuchen
