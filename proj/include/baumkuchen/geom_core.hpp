#pragma once

#include <cmath>
#include <numbers>

namespace baumkuchen {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Relative tolerance for deciding that a point lies on a circle.
inline constexpr double on_circle_rel_tol = 1e-9;

/// Relative (to radius squared) slack below zero tolerated in the ray
/// discriminant before it is treated as a numeric failure.
inline constexpr double discriminant_rel_slack = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point, Point) noexcept = default;
};

[[nodiscard]] constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Point p) noexcept { return std::hypot(p.x, p.y); }
[[nodiscard]] inline double distance(Point a, Point b) noexcept { return norm(a - b); }
[[nodiscard]] inline bool is_finite(Point p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
    Point center;
    double radius = 1.0;
};

/// Throws invalid_argument unless the circle has a finite center and a
/// finite, strictly positive radius.
void check_circle(const Circle& circle);

[[nodiscard]] bool on_circle(const Circle& circle, Point p) noexcept;

/// An angle in radians. Not normalized on construction; use
/// normalize_angle() for the canonical [0, 2π) representative.
class Angle {
public:
    constexpr Angle() noexcept = default;
    constexpr explicit Angle(double radians) noexcept : radians_(radians) {}

    [[nodiscard]] constexpr double radians() const noexcept { return radians_; }

    friend constexpr Angle operator+(Angle a, Angle b) noexcept { return Angle{a.radians_ + b.radians_}; }
    friend constexpr Angle operator-(Angle a, Angle b) noexcept { return Angle{a.radians_ - b.radians_}; }
    friend constexpr bool operator==(Angle, Angle) noexcept = default;

private:
    double radians_ = 0.0;
};

[[nodiscard]] inline Point direction(Angle theta) noexcept
{
    return {std::cos(theta.radians()), std::sin(theta.radians())};
}

/// Representative of theta in [0, 2π). Throws invalid_argument on non-finite input.
[[nodiscard]] Angle normalize_angle(Angle theta);

/// Distance t >= 0 along the ray origin + t·(cos θ, sin θ) to the circle.
/// The origin must lie inside or on the circle.
[[nodiscard]] double ray_exit_distance(const Circle& circle, Point origin, Angle theta);

[[nodiscard]] Point ray_exit_point(const Circle& circle, Point origin, Angle theta);

/// Counter-clockwise angle from a to b about the circle center, in [0, 2π).
/// Coincident points give 0, never 2π.
[[nodiscard]] Angle central_angle(const Circle& circle, Point a, Point b);

/// Area between a chord and its arc for central angle alpha ∈ [0, 2π].
[[nodiscard]] double circular_segment_area(double radius, Angle alpha);

[[nodiscard]] double triangle_area(Point p, Point a, Point b) noexcept;

/// Area of the sector swept counter-clockwise from a to b.
[[nodiscard]] double sector_area(const Circle& circle, Point a, Point b);

} // namespace baumkuchen
