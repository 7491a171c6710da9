#include "baumkuchen/render.hpp"

#include "baumkuchen/error.hpp"

#include <array>
#include <charconv>
#include <locale>
#include <sstream>
#include <string_view>

namespace baumkuchen {

namespace {

constexpr std::array<std::string_view, 16> palette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac", "#1f77b4", "#d62728", "#8c564b", "#17becf", "#bcbd22", "#7f7f7f",
};

constexpr int coord_decimals = 3;
constexpr double marker_px = 5.0;

std::string fixed(double value, int decimals)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) {
        return "0";
    }
    std::string out(buf.data(), end);
    if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

class SvgWriter {
public:
    explicit SvgWriter(const SvgFrame& frame) : frame_(frame) {}

    std::string xy(Point p) const
    {
        const Point q = frame_.to_device(p);
        return fixed(q.x, coord_decimals) + " " + fixed(q.y, coord_decimals);
    }
    std::string x(Point p) const { return fixed(frame_.to_device(p).x, coord_decimals); }
    std::string y(Point p) const { return fixed(frame_.to_device(p).y, coord_decimals); }
    std::string len(double l) const { return fixed(l * frame_.scale, coord_decimals); }
    Point device(Point p) const noexcept { return frame_.to_device(p); }

    // Arc from `from` to `to` on `circle`; counter-clockwise in math
    // orientation unless `clockwise`. Coincident endpoints draw nothing.
    std::string arc(const Circle& circle, Point from, Point to, bool clockwise) const
    {
        if (from == to) {
            return {};
        }
        const double sweep = clockwise ? central_angle(circle, to, from).radians()
                                       : central_angle(circle, from, to).radians();
        const std::string radius = len(circle.radius);
        // the y flip turns math counter-clockwise into SVG sweep-flag 0
        return " A " + radius + " " + radius + " 0 " + (sweep > pi ? "1" : "0") + " " + (clockwise ? "1" : "0") + " "
            + xy(to);
    }

private:
    SvgFrame frame_;
};

void marker(std::ostringstream& svg, const SvgWriter& w, const std::string& id, Point p, const char* fill)
{
    const double h = marker_px / 2.0;
    const Point q = w.device(p);
    svg << "    <rect id=\"" << id << "\" class=\"marker\" x=\"" << fixed(q.x - h, coord_decimals)
        << "\" y=\"" << fixed(q.y - h, coord_decimals) << "\" width=\"" << fixed(marker_px, coord_decimals)
        << "\" height=\"" << fixed(marker_px, coord_decimals) << "\" fill=\"" << fill << "\"/>\n";
}

void label(std::ostringstream& svg, const SvgWriter& w, const std::string& text, Point p)
{
    const Point q = w.device(p);
    svg << "    <text x=\"" << fixed(q.x + 4.0, coord_decimals) << "\" y=\"" << fixed(q.y - 4.0, coord_decimals) << "\">" << text << "</text>\n";
}

} // namespace

SvgFrame SvgFrame::fit(const BaumkuchenConfig& cfg, int canvas_px)
{
    SvgFrame frame;
    frame.center = cfg.center;
    frame.half_canvas = 0.5 * canvas_px;
    frame.scale = svg_fill_fraction * frame.half_canvas / cfg.outer_radius;
    return frame;
}

void validate_render_options(const RenderOptions& opts)
{
    if (opts.canvas_px < 64) {
        throw Error(ErrorCode::invalid_argument, "canvas must be at least 64 px");
    }
    if (opts.decimals < 0 || opts.decimals > 12) {
        throw Error(ErrorCode::invalid_argument, "decimals must lie in [0, 12]");
    }
    if (!std::isfinite(opts.stroke_width) || !(opts.stroke_width > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "stroke width must be positive");
    }
}

std::string render_svg(const BaumkuchenConfig& cfg, const FanPartition& partition, const RenderOptions& opts)
{
    validate_config(cfg);
    validate_render_options(opts);
    const std::size_t count = cfg.wedge_count();
    const std::size_t n = static_cast<std::size_t>(cfg.cuts);
    if (partition.outer_points.size() != count || partition.inner_points.size() != count
        || partition.pieces.size() != count) {
        throw Error(ErrorCode::invalid_argument, "partition does not match the configuration");
    }

    const SvgFrame frame = SvgFrame::fit(cfg, opts.canvas_px);
    const SvgWriter w(frame);
    const Circle outer = cfg.outer_circle();
    const Circle inner = cfg.inner_circle();
    const std::string canvas = std::to_string(opts.canvas_px);
    const std::string stroke = fixed(opts.stroke_width, coord_decimals);

    std::ostringstream svg;
    svg.imbue(std::locale::classic());
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- device = (" << fixed(frame.half_canvas, coord_decimals) << " + s*(x - cx), "
        << fixed(frame.half_canvas, coord_decimals) << " - s*(y - cy)) with s = "
        << fixed(frame.scale, 9) << ", (cx, cy) = (" << fixed(cfg.center.x, 9) << ", " << fixed(cfg.center.y, 9)
        << "); y axis flipped -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << canvas << "\" height=\"" << canvas << "\" fill=\"white\"/>\n";

    if (opts.shade_pairs) {
        svg << "  <g id=\"pieces\" stroke=\"none\">\n";
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t next = (k + 1) % count;
            const Point a0 = partition.outer_points[k];
            const Point a1 = partition.outer_points[next];
            const Point b0 = partition.inner_points[k];
            const Point b1 = partition.inner_points[next];
            svg << "    <path class=\"piece\" fill=\"" << palette[(k % n) % palette.size()] << "\" d=\"M "
                << w.xy(a0) << w.arc(outer, a0, a1, false) << " L " << w.xy(b1) << w.arc(inner, b1, b0, true)
                << " Z\"><title>Piece(A" << k + 1 << ") = " << fixed(partition.pieces[k], opts.decimals)
                << "</title></path>\n";
        }
        svg << "  </g>\n";
    }

    svg << "  <g id=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\">\n";
    for (const Circle& c : {outer, inner}) {
        svg << "    <circle cx=\"" << w.x(c.center) << "\" cy=\"" << w.y(c.center) << "\" r=\"" << w.len(c.radius)
            << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g id=\"cuts\" stroke=\"black\" stroke-width=\"" << stroke << "\">\n";
    for (std::size_t k = 0; k < n; ++k) {
        const Point from = partition.outer_points[k];
        const Point to = partition.outer_points[k + n];
        svg << "    <line x1=\"" << w.x(from) << "\" y1=\"" << w.y(from) << "\" x2=\"" << w.x(to) << "\" y2=\""
            << w.y(to) << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g id=\"points\" font-family=\"serif\" font-size=\"12\">\n";
    marker(svg, w, "point-O", cfg.center, "black");
    marker(svg, w, "point-P", cfg.cut_point, "red");
    if (opts.label_points) {
        label(svg, w, "O", cfg.center);
        label(svg, w, "P", cfg.cut_point);
        for (std::size_t k = 0; k < count; ++k) {
            const std::string idx = std::to_string(k + 1);
            marker(svg, w, "point-A" + idx, partition.outer_points[k], "black");
            label(svg, w, "A" + idx, partition.outer_points[k]);
            marker(svg, w, "point-tA" + idx, partition.inner_points[k], "gray");
            label(svg, w, "Ã" + idx, partition.inner_points[k]);
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

} // namespace baumkuchen
