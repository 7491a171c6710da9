#pragma once

#include "baumkuchen/partition.hpp"

#include <string>

namespace baumkuchen {

struct RenderOptions {
    int canvas_px = 512;
    double stroke_width = 1.5;
    bool shade_pairs = true;
    bool label_points = true;
    int decimals = 4;
};

/// Math-to-device mapping used by render_svg: the outer disk is centred on
/// a square canvas and y is flipped so the figure keeps math orientation.
struct SvgFrame {
    Point center;
    double scale = 1.0; // device pixels per length unit
    double half_canvas = 0.0;

    static SvgFrame fit(const BaumkuchenConfig& cfg, int canvas_px);

    [[nodiscard]] Point to_device(Point p) const noexcept
    {
        return {half_canvas + scale * (p.x - center.x), half_canvas - scale * (p.y - center.y)};
    }
    [[nodiscard]] Point from_device(Point q) const noexcept
    {
        return {center.x + (q.x - half_canvas) / scale, center.y - (q.y - half_canvas) / scale};
    }
};

/// Fraction of the half-canvas taken by the outer radius.
inline constexpr double svg_fill_fraction = 0.84;

void validate_render_options(const RenderOptions& opts);

/// SVG 1.1 document for the configuration and its partition.
[[nodiscard]] std::string render_svg(const BaumkuchenConfig& cfg, const FanPartition& partition,
                                     const RenderOptions& opts = {});

} // namespace baumkuchen
