#pragma once

#include "baumkuchen/partition.hpp"

#include <cstdint>
#include <vector>

namespace baumkuchen {

inline constexpr double default_quad_tol = 1e-12;
inline constexpr int default_quad_depth = 60;
inline constexpr std::uint64_t mc_chunk_size = std::uint64_t{1} << 16;
inline constexpr std::uint64_t mc_min_samples = 10'000;

/// Area of the part of the disk seen from `p` between directions theta1 and
/// theta2 (counter-clockwise), by adaptive Simpson on ½∫ t(θ)² dθ where t is
/// the ray exit distance. Independent of the closed-form slice formulas.
[[nodiscard]] double quad_slice_area(const Circle& circle, Point p, Angle theta1, Angle theta2,
                                     double abs_tol = default_quad_tol, int max_depth = default_quad_depth);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
};

/// Monte Carlo estimates for every wedge of a configuration. `disk` is the
/// estimate for the whole outer disk; its hit count equals the sum of the
/// outer-slice hit counts.
struct McPartition {
    std::vector<McEstimate> outer_slices;
    std::vector<McEstimate> inner_slices;
    std::vector<McEstimate> pieces;
    McEstimate disk;
};

/// Uniform sampling of the bounding square of the outer disk, in fixed
/// chunks of mc_chunk_size samples. Chunk c draws from substream
/// (seed, c), so results do not depend on `threads`.
[[nodiscard]] McPartition mc_partition_areas(const BaumkuchenConfig& cfg, std::uint64_t samples, std::uint64_t seed,
                                             unsigned threads = 1);

/// Wedge index of direction `theta` for a fan with `cuts` lines starting at
/// `phase`. A direction exactly on a cut goes to the lower of its two wedges.
[[nodiscard]] std::size_t classify_wedge(Angle theta, Angle phase, int cuts);

} // namespace baumkuchen
