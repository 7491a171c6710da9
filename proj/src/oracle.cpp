#include "baumkuchen/oracle.hpp"

#include "baumkuchen/error.hpp"
#include "baumkuchen/rng.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace baumkuchen {

namespace {

class SimpsonIntegrator {
public:
    SimpsonIntegrator(const Circle& circle, Point p, int max_depth) : circle_(circle), p_(p), max_depth_(max_depth) {}

    double integrate(double a, double b, double tol) const
    {
        const double fa = f(a);
        const double fb = f(b);
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        return refine(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0);
    }

private:
    double f(double theta) const
    {
        const double t = ray_exit_distance(circle_, p_, Angle{theta});
        return 0.5 * t * t;
    }

    static double simpson(double a, double b, double fa, double fm, double fb)
    {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) const
    {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        if (depth >= max_depth_ || !(lm > a && rm < b)) {
            throw Error(ErrorCode::convergence, "adaptive quadrature did not reach the requested tolerance");
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    Circle circle_;
    Point p_;
    int max_depth_;
};

struct ChunkCounts {
    std::vector<std::uint64_t> outer;
    std::vector<std::uint64_t> inner;
    std::vector<std::uint64_t> piece;
};

ChunkCounts sample_chunk(const BaumkuchenConfig& cfg, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count)
{
    const std::size_t wedges = cfg.wedge_count();
    ChunkCounts counts{std::vector<std::uint64_t>(wedges), std::vector<std::uint64_t>(wedges),
                       std::vector<std::uint64_t>(wedges)};
    const double big = cfg.outer_radius * cfg.outer_radius;
    const double small = cfg.inner_radius * cfg.inner_radius;
    Xoshiro256 rng(seed, chunk);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = cfg.center.x + cfg.outer_radius * (2.0 * rng.uniform() - 1.0);
        const double y = cfg.center.y + cfg.outer_radius * (2.0 * rng.uniform() - 1.0);
        const double dx = x - cfg.center.x;
        const double dy = y - cfg.center.y;
        const double r2 = dx * dx + dy * dy;
        if (r2 > big) {
            continue;
        }
        const double heading = std::atan2(y - cfg.cut_point.y, x - cfg.cut_point.x);
        const std::size_t w = classify_wedge(Angle{heading}, cfg.phase, cfg.cuts);
        ++counts.outer[w];
        // the annulus keeps the inner circle itself; only the open inner disk is removed
        if (r2 < small) {
            ++counts.inner[w];
        } else {
            ++counts.piece[w];
        }
    }
    return counts;
}

McEstimate make_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed, double box_area)
{
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    // Laplace-smoothed proportion keeps the error bar positive for empty wedges.
    const double smoothed = (static_cast<double>(hits) + 1.0) / (n + 2.0);
    McEstimate e;
    e.mean = box_area * p;
    e.std_error = box_area * std::sqrt(smoothed * (1.0 - smoothed) / n);
    e.samples = samples;
    e.seed = seed;
    e.hits = hits;
    return e;
}

} // namespace

double quad_slice_area(const Circle& circle, Point p, Angle theta1, Angle theta2, double abs_tol, int max_depth)
{
    check_circle(circle);
    if (!std::isfinite(abs_tol) || !(abs_tol > 0.0) || max_depth < 0) {
        throw Error(ErrorCode::invalid_argument, "quadrature tolerance must be positive");
    }
    const double a = theta1.radians();
    double span = theta2.radians() - a;
    if (!std::isfinite(span)) {
        throw Error(ErrorCode::invalid_argument, "quadrature limits must be finite");
    }
    if (!(span > 0.0 && span <= two_pi)) {
        span = normalize_angle(Angle{span}).radians();
    }
    if (!(span > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "quadrature interval must have positive length");
    }
    // probe the origin once so an outside point fails before integrating
    (void)ray_exit_distance(circle, p, theta1);

    // A few fixed panels keep the first Simpson estimate from missing a
    // region where the integrand vanishes (origin on the boundary).
    constexpr int panels = 8;
    const SimpsonIntegrator integrator(circle, p, max_depth);
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + span * i / panels;
        const double hi = (i + 1 == panels) ? a + span : a + span * (i + 1) / panels;
        total += integrator.integrate(lo, hi, abs_tol / panels);
    }
    return total;
}

std::size_t classify_wedge(Angle theta, Angle phase, int cuts)
{
    const std::size_t wedges = 2 * static_cast<std::size_t>(cuts);
    const double rel = normalize_angle(theta - phase).radians();
    const double x = rel / (pi / cuts);
    if (x <= 0.0) {
        return 0;
    }
    const double index = std::ceil(x) - 1.0;
    return std::min(static_cast<std::size_t>(index), wedges - 1);
}

McPartition mc_partition_areas(const BaumkuchenConfig& cfg, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads)
{
    validate_config(cfg);
    if (samples < mc_min_samples) {
        throw Error(ErrorCode::invalid_argument, "Monte Carlo needs at least 10^4 samples");
    }
    const std::uint64_t chunks = (samples + mc_chunk_size - 1) / mc_chunk_size;
    std::vector<ChunkCounts> per_chunk(chunks);
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t count = std::min(mc_chunk_size, samples - c * mc_chunk_size);
        per_chunk[c] = sample_chunk(cfg, seed, c, count);
    };

    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, chunks));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::uint64_t c = w; c < chunks; c += workers) {
                            run_chunk(c);
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
    }

    // Integer counts, summed in chunk order.
    const std::size_t wedges = cfg.wedge_count();
    std::vector<std::uint64_t> outer(wedges), inner(wedges), piece(wedges);
    for (const ChunkCounts& cc : per_chunk) {
        for (std::size_t w = 0; w < wedges; ++w) {
            outer[w] += cc.outer[w];
            inner[w] += cc.inner[w];
            piece[w] += cc.piece[w];
        }
    }

    const double box = 4.0 * cfg.outer_radius * cfg.outer_radius;
    McPartition out;
    std::uint64_t in_disk = 0;
    for (std::size_t w = 0; w < wedges; ++w) {
        out.outer_slices.push_back(make_estimate(outer[w], samples, seed, box));
        out.inner_slices.push_back(make_estimate(inner[w], samples, seed, box));
        out.pieces.push_back(make_estimate(piece[w], samples, seed, box));
        in_disk += outer[w];
    }
    out.disk = make_estimate(in_disk, samples, seed, box);
    return out;
}

} // namespace baumkuchen
