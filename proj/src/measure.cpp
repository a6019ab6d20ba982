#include "heis/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heis/parallel.hpp"
#include "heis/special.hpp"
#include "heis/sr_metric.hpp"

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

/// Tail sum_{n>=3} 2 s^(n-2) / (n (n-1) (n-2)) for 0 <= s < 1.
double volume_series_tail(double s) noexcept
{
    double power = s;
    double sum = 0.0;
    for (int n = 3; n < 200; ++n) {
        const double term = 2.0 * power / (static_cast<double>(n) * (n - 1) * (n - 2));
        sum += term;
        if (term <= 1e-18 * sum) {
            break;
        }
        power *= s;
    }
    return sum;
}

/// E(s) = s (1 - s) + s^2 ln s + (1 - s)^2 ln(1 - s) for s in [0, 1/2],
/// with E(0) = 0.
double volume_kernel(double s) noexcept
{
    if (s <= 0.0) {
        return 0.0;
    }
    if (s < 0.1) {
        return s * s * (std::log(s) + 0.5 - volume_series_tail(s));
    }
    return s * (1.0 - s) + s * s * std::log(s) + (1.0 - s) * (1.0 - s) * std::log1p(-s);
}

/// E(s) / s^2 given s and log(s), valid when s underflows.
double volume_kernel_over_s2(double s, double log_s) noexcept
{
    if (s < 0.1) {
        return log_s + 0.5 - volume_series_tail(s);
    }
    return volume_kernel(s) / (s * s);
}

/// (a - 1 + e^(-a)) / a^2 for a >= 0.
double exp_remainder_over_a2(double a) noexcept
{
    if (a < 0.5) {
        double term = 0.5;
        double sum = 0.0;
        for (int k = 2; k < 40; ++k) {
            sum += term;
            if (std::abs(term) <= 1e-18 * sum) {
                break;
            }
            term *= -a / static_cast<double>(k + 1);
        }
        return sum;
    }
    return (a + std::expm1(-a)) / (a * a);
}

/// `samples` uniform points of B(0, 1/2), drawn by rejection in the box
/// |x|, |y| <= 1/2, |z| <= 1 / (8 pi) that contains it.
std::vector<Event> sample_half_ball(std::size_t samples, std::uint64_t seed)
{
    constexpr double kRadius = 0.5;
    const double z_max = kRadius * kRadius / (2.0 * kPi);
    std::vector<std::vector<Event>> per_stream(parallel::kStreams);
    parallel::for_each_task(parallel::kStreams, [&](std::size_t stream) {
        std::mt19937_64 rng = parallel::stream_engine(seed, stream);
        const std::size_t quota = parallel::stream_quota(samples, parallel::kStreams, stream);
        std::vector<Event>& out = per_stream[stream];
        out.reserve(quota);
        while (out.size() < quota) {
            const Event e{parallel::uniform(rng, -kRadius, kRadius), parallel::uniform(rng, -kRadius, kRadius),
                          parallel::uniform(rng, -z_max, z_max)};
            if (sr_distance_from_origin(e) <= kRadius) {
                out.push_back(e);
            }
        }
    });
    std::vector<Event> all;
    all.reserve(samples);
    for (const auto& chunk : per_stream) {
        all.insert(all.end(), chunk.begin(), chunk.end());
    }
    return all;
}

/// Size of the greedy delta-separated net of `points`, all in B(0, 1/2).
std::size_t greedy_net_size(const std::vector<Event>& points, double delta)
{
    const double z_reach = delta * delta / (2.0 * kPi);
    const double cell_xy = delta;
    const double cell_z = delta * delta / kPi + 0.5 * delta;
    auto cell_of = [&](const Event& e) {
        return std::array<long long, 3>{static_cast<long long>(std::floor(e.x / cell_xy)),
                                        static_cast<long long>(std::floor(e.y / cell_xy)),
                                        static_cast<long long>(std::floor(e.z / cell_z))};
    };
    auto key_of = [](long long i, long long j, long long k) {
        constexpr long long kOffset = 1 << 20;
        return static_cast<std::uint64_t>(((i + kOffset) << 42) ^ ((j + kOffset) << 21) ^ (k + kOffset));
    };
    std::unordered_map<std::uint64_t, std::vector<Event>> grid;
    std::size_t count = 0;
    for (const Event& s : points) {
        const auto c = cell_of(s);
        bool separated = true;
        for (long long di = -1; di <= 1 && separated; ++di) {
            for (long long dj = -1; dj <= 1 && separated; ++dj) {
                for (long long dk = -1; dk <= 1 && separated; ++dk) {
                    const auto it = grid.find(key_of(c[0] + di, c[1] + dj, c[2] + dk));
                    if (it == grid.end()) {
                        continue;
                    }
                    for (const Event& n : it->second) {
                        if (std::abs(s.x - n.x) > delta || std::abs(s.y - n.y) > delta) {
                            continue;
                        }
                        const Event rel = group_mul(group_inv(n), s);
                        if (std::abs(rel.z) > z_reach) {
                            continue;
                        }
                        if (sr_distance_from_origin(rel) <= delta) {
                            separated = false;
                            break;
                        }
                    }
                }
            }
        }
        if (separated) {
            grid[key_of(c[0], c[1], c[2])].push_back(s);
            ++count;
        }
    }
    return count;
}

void check_cover_arguments(double radius, double delta, std::size_t samples)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("hausdorff_bounds: radius must be positive");
    }
    if (!(delta > 0.0 && delta < 0.5 * radius)) {
        throw std::invalid_argument("hausdorff_bounds: delta must satisfy 0 < delta < radius / 2");
    }
    if (samples == 0) {
        throw std::invalid_argument("hausdorff_bounds: samples must be positive");
    }
}

}  // namespace

double omega_d(double d)
{
    if (!(d >= 1.0)) {
        throw std::invalid_argument("omega_d: dimension must be at least 1");
    }
    return std::pow(kPi, 0.5 * (d - 1.0)) / (d * std::tgamma(0.5 * (d + 1.0)) * std::pow(2.0, d - 1.0));
}

double diamond_volume_closed(const Event& p, const Event& q)
{
    const Event r = group_mul(group_inv(p), q);
    if (!in_chronological_future(Event{}, r)) {
        return 0.0;
    }
    const double form = (r.x - r.y) * (r.x + r.y);
    const double s = std::max(0.0, 0.5 - 2.0 * std::abs(r.z) / form);
    return -form * form / 8.0 * volume_kernel(s);
}

VolumeEstimate diamond_volume_mc(const Event& p, const Event& q, std::size_t n, std::uint64_t seed)
{
    if (n == 0) {
        throw std::invalid_argument("diamond_volume_mc: n must be positive");
    }
    VolumeEstimate est;
    est.samples = n;
    est.seed = seed;
    const Event target = group_mul(group_inv(p), q);
    if (!in_causal_future(Event{}, target) || !(target.x > 0.0)) {
        return est;
    }
    const double a = target.x;
    std::vector<std::size_t> hits(parallel::kStreams, 0);
    parallel::for_each_task(parallel::kStreams, [&](std::size_t stream) {
        std::mt19937_64 rng = parallel::stream_engine(seed, stream);
        const std::size_t quota = parallel::stream_quota(n, parallel::kStreams, stream);
        std::size_t local = 0;
        for (std::size_t i = 0; i < quota; ++i) {
            const Event s{parallel::uniform(rng, 0.0, a), parallel::uniform(rng, -a, a),
                          parallel::uniform(rng, -0.25 * a * a, 0.25 * a * a)};
            if (in_causal_future(Event{}, s) && in_causal_future(s, target)) {
                ++local;
            }
        }
        hits[stream] = local;
    });
    std::size_t total = 0;
    for (std::size_t h : hits) {
        total += h;
    }
    const double box = a * a * a * a;
    const double frac = static_cast<double>(total) / static_cast<double>(n);
    est.value = box * frac;
    est.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(n));
    return est;
}

double unit_diamond_volume(double w)
{
    const double a = std::abs(w);
    const double remainder = exp_remainder_over_a2(a);
    double s = 0.5;
    double log_s = -std::numbers::ln2;
    if (a > 0.0) {
        const double half = 0.5 * a;
        const double ratio = special::x_over_sinh(half);
        if (ratio > 1e-100) {
            s = remainder * ratio * ratio;
            log_s = std::log(s);
        } else {
            log_s = std::log(remainder) + 2.0 * (std::log(half) - special::log_two_sinh(half) + std::numbers::ln2);
            s = std::exp(log_s);
        }
    }
    return -0.125 * remainder * remainder * volume_kernel_over_s2(s, log_s);
}

std::vector<ScanPoint> growth_ratio_scan(const std::vector<double>& w_values)
{
    std::vector<ScanPoint> out;
    out.reserve(w_values.size());
    for (double w : w_values) {
        out.push_back({w, unit_diamond_volume(w)});
    }
    return out;
}

HausdorffBounds hausdorff_bounds(const Event& center, double radius, double delta, std::uint64_t seed,
                                 std::size_t samples)
{
    const DimensionProbe probe = dimension_probe(center, radius, {4.0}, {delta}, seed, samples);
    const double D = 1.0 / unit_diamond_inner_radius().rho;
    HausdorffBounds out;
    out.delta = delta;
    out.net_size = probe.rows.front().net_size;
    out.diamond_tau = 4.0 * D * delta;
    out.upper = probe.rows.front().sums.front();
    out.lower = omega_d(4.0) * sr_ball_volume(radius) / kGrowthConstant;
    return out;
}

DimensionProbe dimension_probe(const Event& center, double radius, const std::vector<double>& d_values,
                               const std::vector<double>& deltas, std::uint64_t seed, std::size_t samples)
{
    (void)center;
    for (double delta : deltas) {
        check_cover_arguments(radius, delta, samples);
    }
    DimensionProbe out;
    out.d_values = d_values;
    const double D = 1.0 / unit_diamond_inner_radius().rho;
    const std::vector<Event> points = sample_half_ball(samples, seed);
    for (double delta : deltas) {
        DimensionProbeRow row;
        row.delta = delta;
        row.net_size = greedy_net_size(points, delta / radius);
        const double tau = 4.0 * D * delta;
        for (double d : d_values) {
            row.sums.push_back(static_cast<double>(row.net_size) * omega_d(d) * std::pow(tau, d));
        }
        out.rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k + 1 < out.rows.size(); ++k) {
        std::vector<double> ratio;
        for (std::size_t i = 0; i < d_values.size(); ++i) {
            ratio.push_back(out.rows[k + 1].sums[i] / out.rows[k].sums[i]);
        }
        out.ratios.push_back(std::move(ratio));
    }
    return out;
}

}  // namespace heis
