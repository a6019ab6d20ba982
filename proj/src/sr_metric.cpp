#include "heis/sr_metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "heis/parallel.hpp"

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

/// x - sin(x) without cancellation for small |x|.
double x_minus_sin(double x) noexcept
{
    if (std::abs(x) >= 1.0) {
        return x - std::sin(x);
    }
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = 0.0;
    for (int k = 1; k < 30; ++k) {
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) {
            break;
        }
        term *= -x2 / static_cast<double>((2 * k + 2) * (2 * k + 3));
    }
    return sum;
}

/// Area over squared chord of a circular arc with half turning angle psi
/// in (0, pi/2].
double area_ratio_minor(double psi) noexcept
{
    const double s = std::sin(psi);
    return x_minus_sin(2.0 * psi) / (8.0 * s * s);
}

/// Same ratio for the major arc psi = pi - delta, delta in (0, pi/2].
double area_ratio_major(double delta) noexcept
{
    const double s = std::sin(delta);
    return (2.0 * kPi - 2.0 * delta + std::sin(2.0 * delta)) / (8.0 * s * s);
}

/// Boundary point of J((-1,0,0), (1,0,0)). Sheet 0 lies on the boundary of
/// J+((-1,0,0)), sheet 1 on the boundary of J-((1,0,0)); `upper` picks the
/// branch with the larger z. Parameters x and s range over [-1, 1].
struct SheetPoint {
    int sheet = 0;
    bool upper = false;
    double x = 0.0;
    double s = 0.0;
};

constexpr Event kPastVertex{-1.0, 0.0, 0.0};
constexpr Event kFutureVertex{1.0, 0.0, 0.0};

Event sheet_event(const SheetPoint& sp) noexcept
{
    const double sign = sp.upper ? 1.0 : -1.0;
    if (sp.sheet == 0) {
        const double h = sp.x + 1.0;
        const double y = h * sp.s;
        return {sp.x, y, -0.5 * y + sign * 0.25 * (h - y) * (h + y)};
    }
    const double h = 1.0 - sp.x;
    const double y = h * sp.s;
    return {sp.x, y, 0.5 * y + sign * 0.25 * (h - y) * (h + y)};
}

double sheet_objective(const SheetPoint& sp)
{
    const Event e = sheet_event(sp);
    const bool inside = sp.sheet == 0 ? in_causal_future(e, kFutureVertex) : in_causal_future(kPastVertex, e);
    return inside ? sr_distance_from_origin(e) : std::numeric_limits<double>::infinity();
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    SheetPoint where;
};

Candidate refine(Candidate start, double step)
{
    Candidate best = start;
    while (step > 1e-13) {
        bool moved = false;
        const std::array<std::array<double, 2>, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
        for (const auto& d : dirs) {
            SheetPoint trial = best.where;
            trial.x = std::clamp(trial.x + step * d[0], -1.0, 1.0);
            trial.s = std::clamp(trial.s + step * d[1], -1.0, 1.0);
            const double value = sheet_objective(trial);
            if (value < best.value) {
                best = {value, trial};
                moved = true;
            }
        }
        if (!moved) {
            step *= 0.5;
        }
    }
    return best;
}

InnerRadius compute_inner_radius(std::size_t grid)
{
    if (grid < 2) {
        throw std::invalid_argument("unit_diamond_inner_radius: grid must be at least 2");
    }
    const std::size_t rows = 4 * (grid + 1);
    constexpr std::size_t kKeep = 8;
    std::vector<std::vector<Candidate>> per_row(rows);
    parallel::for_each_task(rows, [&](std::size_t row) {
        const std::size_t piece = row / (grid + 1);
        const std::size_t i = row % (grid + 1);
        std::vector<Candidate> best;
        for (std::size_t j = 0; j <= grid; ++j) {
            SheetPoint sp;
            sp.sheet = static_cast<int>(piece / 2);
            sp.upper = (piece % 2) == 1;
            sp.x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid);
            sp.s = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(grid);
            best.push_back({sheet_objective(sp), sp});
        }
        std::partial_sort(best.begin(), best.begin() + std::min(kKeep, best.size()), best.end(),
                          [](const Candidate& l, const Candidate& r) { return l.value < r.value; });
        best.resize(std::min(kKeep, best.size()));
        per_row[row] = std::move(best);
    });
    std::vector<Candidate> all;
    for (const auto& row : per_row) {
        all.insert(all.end(), row.begin(), row.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const Candidate& l, const Candidate& r) { return l.value < r.value; });
    all.resize(std::min(kKeep, all.size()));

    InnerRadius out;
    out.resolution = 2.0 / static_cast<double>(grid);
    out.points = 4 * (grid + 1) * (grid + 1);
    out.grid_rho = all.front().value;
    double refined = out.grid_rho;
    for (const Candidate& c : all) {
        refined = std::min(refined, refine(c, out.resolution).value);
    }
    out.rho = refined;
    return out;
}

double ball_volume_unit()
{
    // Volume of B(0, 1) as an integral over the half turning angle psi of
    // the extremal arcs of length 1: chord sin(psi)/psi, enclosed area
    // (2 psi - sin 2 psi) / (8 psi^2).
    auto integrand = [](double psi) {
        if (psi <= 0.0 || psi >= kPi) {
            return 0.0;
        }
        const double chord = std::sin(psi) / psi;
        const double area = x_minus_sin(2.0 * psi) / (8.0 * psi * psi);
        const double dchord = (std::sin(psi) - psi * std::cos(psi)) / (psi * psi);
        return 4.0 * kPi * chord * area * dchord;
    };
    constexpr int kIntervals = 20000;
    const double h = kPi / kIntervals;
    double sum = integrand(0.0) + integrand(kPi);
    for (int i = 1; i < kIntervals; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(h * i);
    }
    return sum * h / 3.0;
}

}  // namespace

double sr_distance_from_origin(const Event& r)
{
    const double chord = std::hypot(r.x, r.y);
    const double area = std::abs(r.z);
    if (area == 0.0) {
        return chord;
    }
    if (chord == 0.0) {
        return 2.0 * std::sqrt(kPi * area);
    }
    const double ratio = area / (chord * chord);
    if (ratio <= area_ratio_minor(0.5 * kPi)) {
        double lo = 0.0;
        double hi = 0.5 * kPi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (area_ratio_minor(mid) < ratio ? lo : hi) = mid;
        }
        const double psi = 0.5 * (lo + hi);
        return chord * psi / std::sin(psi);
    }
    double lo = 0.0;
    double hi = 0.5 * kPi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (area_ratio_major(mid) > ratio ? lo : hi) = mid;
    }
    const double delta = 0.5 * (lo + hi);
    return chord * (kPi - delta) / std::sin(delta);
}

double sr_distance(const Event& p, const Event& q)
{
    return sr_distance_from_origin(group_mul(group_inv(p), q));
}

bool box_contains(const BoxSpec& spec, const Event& p) noexcept
{
    const double r = spec.r;
    return std::abs(p.x) <= r && std::abs(p.y) <= r && std::abs(p.z) <= r * r;
}

DiamondBoxReport diamond_in_box_check(const Event& p, const Event& q, std::size_t n, std::uint64_t seed)
{
    const Event target = group_mul(group_inv(p), q);
    DiamondBoxReport report;
    if (target.x == 0.0 && target.y == 0.0 && target.z == 0.0) {
        return report;
    }
    if (!in_causal_future(p, q)) {
        throw NotCausalError("diamond_in_box_check: q is not in the causal future of p");
    }
    const double a = target.x;
    const double b = target.y;
    const double z_max = 0.25 * (a - b) * (a + b);
    report.box_side = a;
    report.distance = sr_distance_from_origin(target);
    const BoxSpec sharp{a};
    const BoxSpec coarse{report.distance};

    struct StreamResult {
        std::size_t accepted = 0;
        std::size_t draws = 0;
        std::size_t sharp_violations = 0;
        std::size_t coarse_violations = 0;
        std::optional<Event> first_bad;
    };
    std::vector<StreamResult> results(parallel::kStreams);
    parallel::for_each_task(parallel::kStreams, [&](std::size_t stream) {
        std::mt19937_64 rng = parallel::stream_engine(seed, stream);
        const std::size_t quota = parallel::stream_quota(n, parallel::kStreams, stream);
        const std::size_t max_draws = std::max<std::size_t>(1000000, 100000 * quota);
        StreamResult& res = results[stream];
        while (res.accepted < quota && res.draws < max_draws) {
            const double alpha = parallel::uniform(rng, 0.0, a + b);
            const double beta = parallel::uniform(rng, 0.0, a - b);
            const Event s{0.5 * (alpha + beta), 0.5 * (alpha - beta), parallel::uniform(rng, -z_max, z_max)};
            ++res.draws;
            if (!in_causal_future(Event{}, s) || !in_causal_future(s, target)) {
                continue;
            }
            ++res.accepted;
            const bool in_sharp = box_contains(sharp, s);
            const bool in_coarse = box_contains(coarse, s);
            res.sharp_violations += in_sharp ? 0 : 1;
            res.coarse_violations += in_coarse ? 0 : 1;
            if ((!in_sharp || !in_coarse) && !res.first_bad) {
                res.first_bad = s;
            }
        }
    });
    for (const StreamResult& res : results) {
        report.samples += res.accepted;
        report.draws += res.draws;
        report.sharp_box_violations += res.sharp_violations;
        report.distance_box_violations += res.coarse_violations;
        if (res.first_bad && !report.counterexample) {
            report.counterexample = res.first_bad;
        }
    }
    report.inclusion_pass = report.sharp_box_violations == 0 && report.distance_box_violations == 0;
    return report;
}

InnerRadius unit_diamond_inner_radius(std::size_t grid)
{
    if (grid == 500) {
        static const InnerRadius cached = compute_inner_radius(500);
        return cached;
    }
    return compute_inner_radius(grid);
}

Diamond ball_in_diamond(const Event& p, double r)
{
    if (!(r > 0.0)) {
        throw std::invalid_argument("ball_in_diamond: radius must be positive");
    }
    const double D = 1.0 / unit_diamond_inner_radius().rho;
    return {group_mul(p, Event{-D * r, 0.0, 0.0}), group_mul(p, Event{D * r, 0.0, 0.0})};
}

double ball_box_constant(std::size_t grid)
{
    if (grid < 1) {
        throw std::invalid_argument("ball_box_constant: grid must be positive");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i <= grid; ++i) {
        for (std::size_t j = 0; j <= grid; ++j) {
            const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid);
            const double y = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(grid);
            worst = std::max(worst, sr_distance_from_origin({x, y, 1.0}));
        }
    }
    return worst;
}

double sr_ball_volume(double r)
{
    if (!(r >= 0.0)) {
        throw std::invalid_argument("sr_ball_volume: radius must be nonnegative");
    }
    static const double unit = ball_volume_unit();
    return unit * r * r * r * r;
}

}  // namespace heis
