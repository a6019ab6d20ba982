#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "heis/heisenberg_core.hpp"

namespace heis {

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Sample (w, value) of a one-parameter scan.
struct ScanPoint {
    double w = 0.0;
    double value = 0.0;
};

struct HausdorffBounds {
    double delta = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    /// Size of the delta-separated net of B(center, radius / 2).
    std::size_t net_size = 0;
    /// Time separation of the vertices of each diamond in the dilated cover
    /// of B(center, radius).
    double diamond_tau = 0.0;
};

struct DimensionProbeRow {
    double delta = 0.0;
    std::size_t net_size = 0;
    /// Cover sums, one per entry of DimensionProbe::d_values.
    std::vector<double> sums;
};

struct DimensionProbe {
    std::vector<double> d_values;
    std::vector<DimensionProbeRow> rows;
    /// ratios[k][i] = sums at rows[k + 1] over sums at rows[k] for d_values[i].
    std::vector<std::vector<double>> ratios;
};

/// Largest value of vol(J(0, q)) / tau(0, q)^4, attained at q = (1, 0, 0).
inline constexpr double kGrowthConstant = (2.0 * std::numbers::ln2 - 1.0) / 32.0;

/// Lebesgue volume of the unit diamond of d-dimensional Minkowski space,
/// two cones of height 1/2 over balls of radius 1/2.
double omega_d(double d);

/// Lebesgue volume of J(p, q); zero unless q is in I+(p).
double diamond_volume_closed(const Event& p, const Event& q);

/// Rejection-sampling estimate of vol(J(p, q)) from n points drawn in
/// [0, a] x [-a, a] x [-a^2/4, a^2/4] with (a, b, c) = (-p) * q.
/// Throws std::invalid_argument for n = 0.
VolumeEstimate diamond_volume_mc(const Event& p, const Event& q, std::size_t n, std::uint64_t seed);

/// vol(J(0, q(w))) for the point q(w) = exp(1, 0, w) with tau(0, q(w)) = 1.
double unit_diamond_volume(double w);

/// unit_diamond_volume at each w; the maximum estimates kGrowthConstant.
std::vector<ScanPoint> growth_ratio_scan(const std::vector<double>& w_values);

/// Lower and upper bounds on the 4-dimensional delta pre-measure of the
/// sub-Riemannian ball B(center, radius). The lower bound is
/// omega_4 vol(B) / kGrowthConstant. The upper bound covers a greedy
/// delta-separated net of `samples` points of B(center, radius / 2) with
/// the diamonds of ball_in_diamond and dilates the sum by 2. Both bounds
/// are left invariant, so the result does not depend on center.
/// Throws std::invalid_argument unless radius > 0, 0 < delta < radius / 2
/// and samples > 0.
HausdorffBounds hausdorff_bounds(const Event& center, double radius, double delta, std::uint64_t seed,
                                 std::size_t samples = 100000);

/// Cover sums sum omega_d tau^d for each d in d_values and each delta, using
/// the same covers as hausdorff_bounds.
DimensionProbe dimension_probe(const Event& center, double radius, const std::vector<double>& d_values,
                               const std::vector<double>& deltas, std::uint64_t seed,
                               std::size_t samples = 100000);

}  // namespace heis
