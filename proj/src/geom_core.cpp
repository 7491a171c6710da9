#include "baumkuchen/geom_core.hpp"

#include "baumkuchen/error.hpp"

#include <algorithm>
#include <sstream>

namespace baumkuchen {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::outside_circle: return "outside-circle";
    case ErrorCode::off_boundary: return "off-boundary";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::invalid_cuts: return "invalid-cuts";
    case ErrorCode::point_outside_inner_disk: return "point-outside-inner-disk";
    case ErrorCode::radii_order: return "radii-order";
    case ErrorCode::not_boundary_case: return "not-boundary-case";
    case ErrorCode::degenerate_decomposition: return "degenerate-decomposition";
    case ErrorCode::convergence: return "convergence";
    }
    return "unknown";
}

void check_circle(const Circle& circle)
{
    if (!is_finite(circle.center) || !std::isfinite(circle.radius) || !(circle.radius > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "circle needs a finite center and a finite positive radius");
    }
}

bool on_circle(const Circle& circle, Point p) noexcept
{
    return std::abs(distance(p, circle.center) - circle.radius) <= on_circle_rel_tol * circle.radius;
}

Angle normalize_angle(Angle theta)
{
    const double value = theta.radians();
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::invalid_argument, "angle must be finite");
    }
    double wrapped = std::fmod(value, two_pi);
    if (wrapped < 0.0) {
        wrapped += two_pi;
    }
    // -tiny + 2π rounds to 2π
    if (wrapped >= two_pi) {
        wrapped = 0.0;
    }
    return Angle{wrapped};
}

double ray_exit_distance(const Circle& circle, Point origin, Angle theta)
{
    check_circle(circle);
    if (!is_finite(origin) || !std::isfinite(theta.radians())) {
        throw Error(ErrorCode::invalid_argument, "ray origin and direction must be finite");
    }
    const double rho = circle.radius;
    const Point w = circle.center - origin;
    const double d = norm(w);
    if (d - rho > on_circle_rel_tol * rho) {
        std::ostringstream msg;
        msg << "ray origin lies outside the circle (distance " << d << " > radius " << rho << ")";
        throw Error(ErrorCode::outside_circle, msg.str());
    }

    const Point u = direction(theta);
    const double b = dot(w, u);
    // ρ² − d², with origins on (or within tolerance outside) the boundary pinned to 0
    double c = (rho - d) * (rho + d);
    if (c <= discriminant_rel_slack * rho * rho) {
        c = 0.0;
    }
    const double disc = b * b + c;
    if (!(disc >= 0.0)) {
        throw Error(ErrorCode::numeric, "negative discriminant in ray/circle intersection");
    }
    const double root = std::sqrt(disc);
    if (b > 0.0) {
        return b + root;
    }
    // b ≤ 0: b + root cancels, use the conjugate form
    const double denom = root - b;
    if (c == 0.0 || denom == 0.0) {
        return 0.0;
    }
    return std::max(0.0, c / denom);
}

Point ray_exit_point(const Circle& circle, Point origin, Angle theta)
{
    const double t = ray_exit_distance(circle, origin, theta);
    return origin + t * direction(theta);
}

Angle central_angle(const Circle& circle, Point a, Point b)
{
    check_circle(circle);
    if (!on_circle(circle, a) || !on_circle(circle, b)) {
        throw Error(ErrorCode::off_boundary, "central_angle: point is not on the circle");
    }
    if (a == b) {
        return Angle{0.0};
    }
    const Point ra = a - circle.center;
    const Point rb = b - circle.center;
    return normalize_angle(Angle{std::atan2(cross(ra, rb), dot(ra, rb))});
}

double circular_segment_area(double radius, Angle alpha)
{
    if (!std::isfinite(radius) || !(radius > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "segment radius must be finite and positive");
    }
    const double a = alpha.radians();
    if (!(a >= 0.0 && a <= two_pi)) {
        throw Error(ErrorCode::invalid_argument, "segment angle must lie in [0, 2π]");
    }
    double excess = 0.0; // α − sin α
    if (a < 0.1) {
        // Taylor series avoids the cancellation in α − sin α
        const double a2 = a * a;
        excess = a * a2 / 6.0 * (1.0 - a2 / 20.0 * (1.0 - a2 / 42.0 * (1.0 - a2 / 72.0)));
    } else {
        excess = a - std::sin(a);
    }
    return 0.5 * radius * radius * excess;
}

double triangle_area(Point p, Point a, Point b) noexcept
{
    return 0.5 * std::abs(cross(a - p, b - p));
}

double sector_area(const Circle& circle, Point a, Point b)
{
    return 0.5 * circle.radius * circle.radius * central_angle(circle, a, b).radians();
}

} // namespace baumkuchen
