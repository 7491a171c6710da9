#pragma once

#include "baumkuchen/partition.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace baumkuchen {

/// Default tolerance, relative to the reference disk area.
inline constexpr double default_tolerance = 1e-10;

struct Residual {
    std::string label;
    double value = 0.0;
};

/// Outcome of checking one identity. Residual values are dimensionless:
/// area residuals are divided by the reference disk area (πR², or πr² for
/// the inner-disk identities), angle residuals are in radians. `passed`
/// holds exactly when every |value| ≤ tolerance.
struct VerificationReport {
    std::string identity;
    std::vector<Residual> residuals;
    double tolerance = default_tolerance;
    bool passed = false;
    BaumkuchenConfig config;

    [[nodiscard]] double max_abs_residual() const noexcept;
};

/// A single disk cut by an equiangular fan, as used by the pizza identity.
struct DiskFanConfig {
    Point center;
    double radius = 1.0;
    Point cut_point;
    int cuts = 4;
    Angle phase;

    /// Same geometry as a degenerate annulus with equal radii.
    [[nodiscard]] BaumkuchenConfig as_baumkuchen() const noexcept
    {
        return {center, radius, radius, cut_point, cuts, phase};
    }
};

/// Person k (0-based) holds four 1-based slice labels; totals are filled
/// in only when slice areas were available.
struct PizzaAssignment {
    int people = 0;
    std::vector<std::array<int, 4>> shares;
    std::vector<double> totals;
};

[[nodiscard]] VerificationReport verify_theorem1(const BaumkuchenConfig& cfg, double tol = default_tolerance);

/// Runs verify_theorem1 over many configs, optionally across threads.
/// Results are returned in input order regardless of thread count.
[[nodiscard]] std::vector<VerificationReport> verify_theorem1_batch(std::span<const BaumkuchenConfig> configs,
                                                                    double tol = default_tolerance,
                                                                    unsigned threads = 1);

/// Splits the annulus along the circle through the cut point and checks
/// that each piece equals the difference of the two sub-annulus pieces.
[[nodiscard]] VerificationReport decompose_via_op(const BaumkuchenConfig& cfg, double tol = default_tolerance);

[[nodiscard]] VerificationReport verify_lemma2(const BaumkuchenConfig& cfg, double tol = default_tolerance);

[[nodiscard]] VerificationReport verify_lemma3(const BaumkuchenConfig& cfg, double tol = default_tolerance);

[[nodiscard]] PizzaAssignment pizza_assignment(int cuts);

/// pizza_assignment with per-person totals of the disk slice areas.
[[nodiscard]] PizzaAssignment pizza_shares(const DiskFanConfig& disk);

[[nodiscard]] VerificationReport verify_pizza(const DiskFanConfig& disk, double tol = default_tolerance);

} // namespace baumkuchen
