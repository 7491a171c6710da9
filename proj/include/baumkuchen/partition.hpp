#pragma once

#include "baumkuchen/geom_core.hpp"

#include <cstddef>
#include <vector>

namespace baumkuchen {

/// Two concentric disks (outer D, inner D̃) and a fan of `cuts` lines through
/// `cut_point`. The annulus between them is the region the pieces live on.
struct BaumkuchenConfig {
    Point center;
    double outer_radius = 1.0;
    double inner_radius = 1.0;
    Point cut_point;
    int cuts = 4;
    Angle phase;

    [[nodiscard]] Circle outer_circle() const noexcept { return {center, outer_radius}; }
    [[nodiscard]] Circle inner_circle() const noexcept { return {center, inner_radius}; }
    [[nodiscard]] std::size_t wedge_count() const noexcept { return 2 * static_cast<std::size_t>(cuts); }
};

/// Per-wedge data for the fan. Index k is the wedge between directions k and
/// k+1 (counter-clockwise); it corresponds to the 1-based label k+1.
struct FanPartition {
    std::vector<Angle> directions;
    std::vector<Point> outer_points;
    std::vector<Point> inner_points;
    std::vector<double> outer_slices;
    std::vector<double> inner_slices;
    std::vector<double> outer_sectors;
    std::vector<double> pieces;
};

/// Inner-disk slices relabelled for a cut point on the inner boundary.
/// vertices[k] is the k+1-th intersection clockwise from the cut point;
/// chord_slices[k] is the slice between vertices[k] and vertices[k+1].
struct BoundaryCaseSlices {
    std::vector<Point> vertices;            // n points
    std::vector<std::size_t> vertex_directions; // direction index of each vertex
    std::vector<double> chord_slices;       // n - 1 areas
    double end_figure = 0.0;
};

/// Returns cfg unchanged when valid; throws Error otherwise.
const BaumkuchenConfig& validate_config(const BaumkuchenConfig& cfg);

/// True when the cut point lies on the inner circle within on_circle_rel_tol.
[[nodiscard]] bool cut_point_on_inner_boundary(const BaumkuchenConfig& cfg) noexcept;

/// The 2n directions phase + k·π/n, each normalized to [0, 2π).
[[nodiscard]] std::vector<Angle> cut_directions(const BaumkuchenConfig& cfg);

/// Exit points of the 2n fan rays on `circle`.
[[nodiscard]] std::vector<Point> boundary_points(const Circle& circle, const BaumkuchenConfig& cfg);

/// Area of the part of `circle`'s disk between rays k and k+1 from the cut point.
[[nodiscard]] double wedge_slice_area(const Circle& circle, const BaumkuchenConfig& cfg, std::size_t k);

[[nodiscard]] FanPartition full_partition(const BaumkuchenConfig& cfg);

[[nodiscard]] BoundaryCaseSlices boundary_case_slices(const BaumkuchenConfig& cfg);

/// 1-based label of internal index k among `count` entries. With
/// `clockwise` the numbering runs the other way round, keeping index 0 as 1.
[[nodiscard]] std::size_t display_label(std::size_t k, std::size_t count, bool clockwise) noexcept;

} // namespace baumkuchen
