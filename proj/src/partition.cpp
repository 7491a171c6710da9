#include "baumkuchen/partition.hpp"

#include "baumkuchen/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace baumkuchen {

namespace {

constexpr double piece_clamp_rel = 1e-12;

bool finite_config(const BaumkuchenConfig& cfg) noexcept
{
    return is_finite(cfg.center) && is_finite(cfg.cut_point) && std::isfinite(cfg.outer_radius)
        && std::isfinite(cfg.inner_radius) && std::isfinite(cfg.phase.radians());
}

Angle direction_at(const BaumkuchenConfig& cfg, std::size_t k)
{
    return normalize_angle(Angle{cfg.phase.radians() + static_cast<double>(k) * pi / cfg.cuts});
}

// Slice of the disk between two consecutive rays, given their exit points.
double slice_between(const Circle& circle, Point apex, Point from, Point to)
{
    if (from == apex && to == apex) {
        return 0.0;
    }
    const Angle arc = central_angle(circle, from, to);
    return triangle_area(apex, from, to) + circular_segment_area(circle.radius, arc);
}

std::vector<double> slices_from_points(const Circle& circle, Point apex, const std::vector<Point>& exits)
{
    const std::size_t count = exits.size();
    std::vector<double> areas(count);
    for (std::size_t k = 0; k < count; ++k) {
        areas[k] = slice_between(circle, apex, exits[k], exits[(k + 1) % count]);
    }
    return areas;
}

} // namespace

const BaumkuchenConfig& validate_config(const BaumkuchenConfig& cfg)
{
    if (!finite_config(cfg)) {
        throw Error(ErrorCode::invalid_argument, "configuration fields must be finite");
    }
    if (cfg.cuts < 4 || cfg.cuts % 2 != 0) {
        throw Error(ErrorCode::invalid_cuts, "cuts must be even and ≥ 4");
    }
    if (!(cfg.outer_radius > 0.0) || !(cfg.inner_radius > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "radii must be positive");
    }
    if (cfg.inner_radius > cfg.outer_radius) {
        throw Error(ErrorCode::radii_order, "inner radius must not exceed outer radius");
    }
    const double offset = distance(cfg.cut_point, cfg.center);
    if (offset - cfg.inner_radius > on_circle_rel_tol * cfg.inner_radius) {
        std::ostringstream msg;
        msg << "cut point lies outside the inner disk (|P-O| = " << offset << " > " << cfg.inner_radius << ")";
        throw Error(ErrorCode::point_outside_inner_disk, msg.str());
    }
    return cfg;
}

bool cut_point_on_inner_boundary(const BaumkuchenConfig& cfg) noexcept
{
    return on_circle(cfg.inner_circle(), cfg.cut_point);
}

std::vector<Angle> cut_directions(const BaumkuchenConfig& cfg)
{
    validate_config(cfg);
    std::vector<Angle> dirs(cfg.wedge_count());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        dirs[k] = direction_at(cfg, k);
    }
    return dirs;
}

std::vector<Point> boundary_points(const Circle& circle, const BaumkuchenConfig& cfg)
{
    const std::vector<Angle> dirs = cut_directions(cfg);
    std::vector<Point> points;
    points.reserve(dirs.size());
    for (const Angle theta : dirs) {
        points.push_back(ray_exit_point(circle, cfg.cut_point, theta));
    }
    return points;
}

double wedge_slice_area(const Circle& circle, const BaumkuchenConfig& cfg, std::size_t k)
{
    validate_config(cfg);
    const std::size_t count = cfg.wedge_count();
    if (k >= count) {
        throw Error(ErrorCode::invalid_argument, "wedge index out of range");
    }
    const Point from = ray_exit_point(circle, cfg.cut_point, direction_at(cfg, k));
    const Point to = ray_exit_point(circle, cfg.cut_point, direction_at(cfg, (k + 1) % count));
    return slice_between(circle, cfg.cut_point, from, to);
}

FanPartition full_partition(const BaumkuchenConfig& cfg)
{
    FanPartition fan;
    fan.directions = cut_directions(cfg);

    const Circle outer = cfg.outer_circle();
    const Circle inner = cfg.inner_circle();
    const std::size_t count = fan.directions.size();
    fan.outer_points.reserve(count);
    fan.inner_points.reserve(count);
    for (const Angle theta : fan.directions) {
        fan.outer_points.push_back(ray_exit_point(outer, cfg.cut_point, theta));
        fan.inner_points.push_back(ray_exit_point(inner, cfg.cut_point, theta));
    }

    fan.outer_slices = slices_from_points(outer, cfg.cut_point, fan.outer_points);
    fan.inner_slices = slices_from_points(inner, cfg.cut_point, fan.inner_points);
    fan.outer_sectors.resize(count);
    fan.pieces.resize(count);

    const double floor = -piece_clamp_rel * pi * cfg.outer_radius * cfg.outer_radius;
    for (std::size_t k = 0; k < count; ++k) {
        fan.outer_sectors[k] = sector_area(outer, fan.outer_points[k], fan.outer_points[(k + 1) % count]);
        const double piece = fan.outer_slices[k] - fan.inner_slices[k];
        if (piece < floor) {
            std::ostringstream msg;
            msg << "piece " << k + 1 << " has negative area " << piece;
            throw Error(ErrorCode::numeric, msg.str());
        }
        fan.pieces[k] = std::max(piece, 0.0);
    }
    return fan;
}

BoundaryCaseSlices boundary_case_slices(const BaumkuchenConfig& cfg)
{
    validate_config(cfg);
    if (!cut_point_on_inner_boundary(cfg)) {
        throw Error(ErrorCode::not_boundary_case, "cut point is not on the inner boundary");
    }
    const FanPartition fan = full_partition(cfg);
    const std::size_t count = fan.directions.size();
    const std::size_t n = static_cast<std::size_t>(cfg.cuts);

    // The first vertex clockwise from P belongs to the first direction at or
    // clockwise of the tangent at P that turns into the disk. A direction
    // exactly along the tangent is kept and contributes P itself.
    const Point to_center = cfg.center - cfg.cut_point;
    const double tangent = std::atan2(to_center.y, to_center.x) + 0.5 * pi + 1e-12;
    std::size_t first = 0;
    double best = two_pi;
    for (std::size_t j = 0; j < count; ++j) {
        const double lag = normalize_angle(Angle{tangent - fan.directions[j].radians()}).radians();
        if (lag < best) {
            best = lag;
            first = j;
        }
    }

    BoundaryCaseSlices out;
    out.vertices.reserve(n);
    out.vertex_directions.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = (first + count - k) % count;
        out.vertex_directions.push_back(j);
        out.vertices.push_back(fan.inner_points[j]);
    }
    out.chord_slices.reserve(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t wedge = (first + count - k - 1) % count;
        out.chord_slices.push_back(fan.inner_slices[wedge]);
    }
    const double disk = pi * cfg.inner_radius * cfg.inner_radius;
    const double rest = disk - std::accumulate(out.chord_slices.begin(), out.chord_slices.end(), 0.0);
    out.end_figure = std::max(rest, 0.0);
    return out;
}

std::size_t display_label(std::size_t k, std::size_t count, bool clockwise) noexcept
{
    if (count == 0) {
        return 0;
    }
    return clockwise ? (count - k) % count + 1 : k + 1;
}

} // namespace baumkuchen
