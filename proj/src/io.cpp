#include "baumkuchen/io.hpp"

#include "baumkuchen/error.hpp"

#include <cmath>

namespace baumkuchen {

namespace {

[[noreturn]] void bad_config(const std::string& what)
{
    throw Error(ErrorCode::invalid_argument, "config: " + what);
}

double number_field(const Json& value, const std::string& key)
{
    if (!value.is_number()) {
        bad_config("'" + key + "' must be a number");
    }
    return value.get<double>();
}

Point point_field(const Json& value, const std::string& key)
{
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        bad_config("'" + key + "' must be an array of two numbers");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

Json areas(const std::vector<double>& values)
{
    Json out = Json::array();
    for (const double v : values) {
        out.push_back(v);
    }
    return out;
}

double sum(const std::vector<double>& values)
{
    double total = 0.0;
    for (const double v : values) {
        total += v;
    }
    return total;
}

} // namespace

ConfigFields parse_config_json(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad_config(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        bad_config("top level must be an object");
    }

    ConfigFields fields;
    for (const auto& [key, value] : doc.items()) {
        if (key == "center") {
            fields.center = point_field(value, key);
        } else if (key == "point") {
            fields.point = point_field(value, key);
        } else if (key == "outer_radius") {
            fields.outer_radius = number_field(value, key);
        } else if (key == "inner_radius") {
            fields.inner_radius = number_field(value, key);
        } else if (key == "phase") {
            fields.phase = number_field(value, key);
        } else if (key == "cuts") {
            const double cuts = number_field(value, key);
            if (cuts != std::floor(cuts) || std::abs(cuts) > 1e6) {
                bad_config("'cuts' must be an integer");
            }
            fields.cuts = static_cast<int>(cuts);
        } else {
            bad_config("unknown key '" + key + "'");
        }
    }
    return fields;
}

Json to_json(Point p)
{
    return Json::array({p.x, p.y});
}

Json to_json(const BaumkuchenConfig& cfg)
{
    Json out = Json::object();
    out["center"] = to_json(cfg.center);
    out["outer_radius"] = cfg.outer_radius;
    out["inner_radius"] = cfg.inner_radius;
    out["point"] = to_json(cfg.cut_point);
    out["cuts"] = cfg.cuts;
    out["phase"] = cfg.phase.radians();
    return out;
}

Json to_json(const VerificationReport& report)
{
    Json out = Json::object();
    out["identity"] = report.identity;
    out["passed"] = report.passed;
    out["tolerance"] = report.tolerance;
    Json residuals = Json::array();
    for (const Residual& r : report.residuals) {
        Json entry = Json::object();
        entry["label"] = r.label;
        entry["value"] = r.value;
        residuals.push_back(std::move(entry));
    }
    out["residuals"] = std::move(residuals);
    out["config"] = to_json(report.config);
    return out;
}

Json partition_json(const BaumkuchenConfig& cfg, const FanPartition& fan, bool clockwise)
{
    const std::size_t count = fan.directions.size();
    Json out = Json::object();
    out["config"] = to_json(cfg);
    out["orientation"] = clockwise ? "clockwise" : "counterclockwise";

    Json labels = Json::array();
    Json directions = Json::array();
    Json outer_points = Json::array();
    Json inner_points = Json::array();
    for (std::size_t k = 0; k < count; ++k) {
        labels.push_back(display_label(k, count, clockwise));
        directions.push_back(fan.directions[k].radians());
        outer_points.push_back(to_json(fan.outer_points[k]));
        inner_points.push_back(to_json(fan.inner_points[k]));
    }
    out["labels"] = std::move(labels);
    out["directions"] = std::move(directions);
    out["outer_points"] = std::move(outer_points);
    out["inner_points"] = std::move(inner_points);
    out["outer_slices"] = areas(fan.outer_slices);
    out["inner_slices"] = areas(fan.inner_slices);
    out["outer_sectors"] = areas(fan.outer_sectors);
    out["pieces"] = areas(fan.pieces);

    Json totals = Json::object();
    totals["outer_slices"] = sum(fan.outer_slices);
    totals["inner_slices"] = sum(fan.inner_slices);
    totals["pieces"] = sum(fan.pieces);
    out["totals"] = std::move(totals);
    return out;
}

Json pizza_json(const DiskFanConfig& disk, const PizzaAssignment& assignment)
{
    Json out = Json::object();
    Json config = Json::object();
    config["center"] = to_json(disk.center);
    config["radius"] = disk.radius;
    config["point"] = to_json(disk.cut_point);
    config["cuts"] = disk.cuts;
    config["phase"] = disk.phase.radians();
    out["config"] = std::move(config);
    out["people"] = assignment.people;
    out["target"] = 2.0 * pi * disk.radius * disk.radius / disk.cuts;

    Json shares = Json::array();
    for (std::size_t k = 0; k < assignment.shares.size(); ++k) {
        Json person = Json::object();
        person["person"] = k + 1;
        person["slices"] = Json::array();
        for (const int label : assignment.shares[k]) {
            person["slices"].push_back(label);
        }
        if (k < assignment.totals.size()) {
            person["total"] = assignment.totals[k];
        }
        shares.push_back(std::move(person));
    }
    out["shares"] = std::move(shares);
    return out;
}

Json to_json(const McEstimate& estimate)
{
    Json out = Json::object();
    out["mean"] = estimate.mean;
    out["std_error"] = estimate.std_error;
    out["hits"] = estimate.hits;
    out["samples"] = estimate.samples;
    out["seed"] = estimate.seed;
    return out;
}

} // namespace baumkuchen
