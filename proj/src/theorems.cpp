#include "baumkuchen/theorems.hpp"

#include "baumkuchen/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace baumkuchen {

namespace {

void check_tolerance(double tol)
{
    if (!std::isfinite(tol) || tol < 0.0) {
        throw Error(ErrorCode::invalid_argument, "tolerance must be finite and non-negative");
    }
}

void require_boundary_case(const BaumkuchenConfig& cfg)
{
    validate_config(cfg);
    if (!cut_point_on_inner_boundary(cfg)) {
        throw Error(ErrorCode::not_boundary_case, "cut point must lie on the inner boundary");
    }
}

std::string label_pair(std::size_t a, std::size_t b)
{
    return "Piece(A" + std::to_string(a) + ")+Piece(A" + std::to_string(b) + ")";
}

VerificationReport finish(VerificationReport report)
{
    report.passed = !report.residuals.empty() && report.max_abs_residual() <= report.tolerance;
    return report;
}

// Residuals of Piece(k) + Piece(k+n) against the annulus area / n.
VerificationReport antipodal_piece_report(const BaumkuchenConfig& cfg, double tol, std::string identity)
{
    check_tolerance(tol);
    const FanPartition fan = full_partition(cfg);
    const std::size_t n = static_cast<std::size_t>(cfg.cuts);
    const double big = cfg.outer_radius * cfg.outer_radius;
    const double small = cfg.inner_radius * cfg.inner_radius;
    const double scale = pi * big;
    const double target = pi * (big - small) / static_cast<double>(cfg.cuts);

    VerificationReport report;
    report.identity = std::move(identity);
    report.tolerance = tol;
    report.config = cfg;
    for (std::size_t k = 0; k < n; ++k) {
        const double pair = fan.pieces[k] + fan.pieces[k + n];
        report.residuals.push_back({label_pair(k + 1, k + n + 1), (pair - target) / scale});
    }
    return finish(std::move(report));
}

} // namespace

double VerificationReport::max_abs_residual() const noexcept
{
    double worst = 0.0;
    for (const Residual& r : residuals) {
        worst = std::max(worst, std::abs(r.value));
    }
    return worst;
}

VerificationReport verify_theorem1(const BaumkuchenConfig& cfg, double tol)
{
    return antipodal_piece_report(cfg, tol, "baumkuchen");
}

std::vector<VerificationReport> verify_theorem1_batch(std::span<const BaumkuchenConfig> configs, double tol,
                                                      unsigned threads)
{
    std::vector<VerificationReport> out(configs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(configs.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < configs.size(); ++i) {
            out[i] = verify_theorem1(configs[i], tol);
        }
        return out;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < configs.size(); i += workers) {
                        out[i] = verify_theorem1(configs[i], tol);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

VerificationReport decompose_via_op(const BaumkuchenConfig& cfg, double tol)
{
    check_tolerance(tol);
    validate_config(cfg);
    const double offset = distance(cfg.cut_point, cfg.center);
    if (offset <= 1e-12 * cfg.inner_radius) {
        throw Error(ErrorCode::degenerate_decomposition, "cut point coincides with the center");
    }
    const double through_p = std::min(offset, cfg.inner_radius);

    // B1 = D minus the open disk through P, B2 = D̃ minus the same disk.
    BaumkuchenConfig b1 = cfg;
    b1.inner_radius = through_p;
    BaumkuchenConfig b2 = cfg;
    b2.outer_radius = cfg.inner_radius;
    b2.inner_radius = through_p;

    const FanPartition whole = full_partition(cfg);
    const FanPartition first = full_partition(b1);
    const FanPartition second = full_partition(b2);

    VerificationReport report;
    report.identity = "decompose";
    report.tolerance = tol;
    report.config = cfg;
    const double scale = pi * cfg.outer_radius * cfg.outer_radius;
    for (std::size_t k = 0; k < whole.pieces.size(); ++k) {
        const double diff = whole.pieces[k] - (first.pieces[k] - second.pieces[k]);
        report.residuals.push_back({"Piece_B(A" + std::to_string(k + 1) + ")-(Piece_B1-Piece_B2)", diff / scale});
    }
    return finish(std::move(report));
}

VerificationReport verify_lemma2(const BaumkuchenConfig& cfg, double tol)
{
    check_tolerance(tol);
    require_boundary_case(cfg);
    const BoundaryCaseSlices slices = boundary_case_slices(cfg);
    const Circle inner = cfg.inner_circle();
    const std::size_t n = static_cast<std::size_t>(cfg.cuts);
    const std::size_t half = n / 2;
    const double disk = pi * cfg.inner_radius * cfg.inner_radius;
    const double share = 2.0 * disk / static_cast<double>(cfg.cuts);
    const double side_angle = two_pi / static_cast<double>(cfg.cuts);

    VerificationReport report;
    report.identity = "lemma2";
    report.tolerance = tol;
    report.config = cfg;

    // (1) consecutive vertices, walked clockwise, are 2π/n apart; the last
    // step closes the polygon through P.
    for (std::size_t k = 0; k < n; ++k) {
        const Point from = slices.vertices[k];
        const Point to = slices.vertices[(k + 1) % n];
        const double step = central_angle(inner, to, from).radians();
        report.residuals.push_back({"regularity: angle(Ã" + std::to_string(k + 1) + ",Ã"
                                        + std::to_string((k + 1) % n + 1) + ")-2π/n",
                                    step - side_angle});
    }
    // (2) opposite chord slices share 2/n of the disk.
    for (std::size_t k = 1; k < half; ++k) {
        const double sum = slices.chord_slices[k - 1] + slices.chord_slices[k - 1 + half];
        report.residuals.push_back({"Sl(Ã" + std::to_string(k) + ")+Sl(Ã" + std::to_string(k + half) + ")-2/n·πr²",
                                    (sum - share) / disk});
    }
    // (3) the middle slice plus the end figure through P.
    const double last = slices.chord_slices[half - 1] + slices.end_figure;
    report.residuals.push_back(
        {"Sl(Ã" + std::to_string(half) + ")+end_figure-2/n·πr²", (last - share) / disk});
    return finish(std::move(report));
}

VerificationReport verify_lemma3(const BaumkuchenConfig& cfg, double tol)
{
    require_boundary_case(cfg);
    return antipodal_piece_report(cfg, tol, "lemma3");
}

PizzaAssignment pizza_assignment(int cuts)
{
    if (cuts < 4 || cuts % 4 != 0) {
        throw Error(ErrorCode::invalid_cuts, "pizza sharing needs cuts to be a multiple of 4");
    }
    PizzaAssignment out;
    out.people = cuts / 2;
    out.shares.reserve(static_cast<std::size_t>(out.people));
    const int half = cuts / 2;
    for (int k = 1; k <= out.people; ++k) {
        out.shares.push_back({k, k + half, k + cuts, k + 3 * half});
    }
    return out;
}

PizzaAssignment pizza_shares(const DiskFanConfig& disk)
{
    PizzaAssignment out = pizza_assignment(disk.cuts);
    const BaumkuchenConfig cfg = validate_config(disk.as_baumkuchen());
    if (!(distance(cfg.cut_point, cfg.center) < cfg.outer_radius)) {
        throw Error(ErrorCode::point_outside_inner_disk, "cut point must lie strictly inside the disk");
    }
    const FanPartition fan = full_partition(cfg);
    out.totals.reserve(out.shares.size());
    for (const auto& share : out.shares) {
        double total = 0.0;
        for (const int label : share) {
            total += fan.outer_slices[static_cast<std::size_t>(label - 1)];
        }
        out.totals.push_back(total);
    }
    return out;
}

VerificationReport verify_pizza(const DiskFanConfig& disk, double tol)
{
    check_tolerance(tol);
    const PizzaAssignment shares = pizza_shares(disk);
    const double scale = pi * disk.radius * disk.radius;
    const double target = 2.0 * scale / static_cast<double>(disk.cuts);

    VerificationReport report;
    report.identity = "pizza";
    report.tolerance = tol;
    report.config = disk.as_baumkuchen();
    for (std::size_t person = 0; person < shares.shares.size(); ++person) {
        report.residuals.push_back(
            {"person " + std::to_string(person + 1) + " total-2πR²/n", (shares.totals[person] - target) / scale});
    }
    return finish(std::move(report));
}

} // namespace baumkuchen
