#include "heis/geodesics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "heis/special.hpp"

namespace heis {

namespace {

constexpr double kExpSeriesCutoff = 1e-4;

/// Odd increasing map F(w) = (sinh w - w) / (8 sinh^2(w/2)) onto (-1/4, 1/4).
double normalized_height(double w) noexcept
{
    const double a = std::abs(w);
    if (a == 0.0) {
        return 0.0;
    }
    double value = 0.0;
    if (a > 20.0) {
        const double e = std::exp(-a);
        value = (1.0 - e * e - 2.0 * a * e) / (4.0 * (1.0 - e) * (1.0 - e));
    } else {
        const double s = std::sinh(0.5 * a);
        value = special::sinh_minus_x(a) / (8.0 * s * s);
    }
    return std::copysign(value, w);
}

/// Solves normalized_height(w) = target for |target| < 1/4.
double solve_height(double target) noexcept
{
    const double goal = std::abs(target);
    if (goal == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = 2.0;
    while (normalized_height(hi) < goal && hi < 4096.0) {
        lo = hi;
        hi *= 2.0;
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (normalized_height(mid) < goal) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double w = std::abs(normalized_height(lo) - goal) <= std::abs(normalized_height(hi) - goal) ? lo : hi;
    return std::copysign(w, target);
}

/// Axis-aligned data of a point in I+(0): Lorentzian length T of the
/// planar projection and the curvature parameter w.
struct AxisData {
    double T = 0.0;
    double w = 0.0;
};

AxisData axis_data(const Event& q) noexcept
{
    AxisData out;
    out.T = std::sqrt((q.x - q.y) * (q.x + q.y));
    out.w = solve_height(q.z / (out.T * out.T));
    return out;
}

}  // namespace

bool in_timelike_domain(const GeoParam& param) noexcept
{
    return param.u > std::abs(param.v) && std::isfinite(param.w);
}

Event exp_point(const GeoParam& param, double t) noexcept
{
    const double u = param.u;
    const double v = param.v;
    const double w = param.w;
    const double s = w * t;
    const double form = (u - v) * (u + v);
    if (std::abs(s) < kExpSeriesCutoff) {
        const double s2 = s * s;
        return {t * (u + v * s / 2.0 + u * s2 / 6.0), t * (v + u * s / 2.0 + v * s2 / 6.0),
                form * t * t * t * w / 12.0 * (1.0 + s2 / 20.0)};
    }
    const double shc = special::sinhc(s);
    const double chc = special::cosh_m1_over_x(s);
    return {t * (u * shc + v * chc), t * (v * shc + u * chc),
            0.5 * form * t * t * special::sinh_minus_x_over_x2(s)};
}

double exp_jacobian_det(const GeoParam& param, double t) noexcept
{
    const double form = (param.u - param.v) * (param.u + param.v);
    const double t5 = t * t * t * t * t;
    const double wt = param.w * t;
    if (std::abs(wt) < kExpSeriesCutoff) {
        return t5 * form / 12.0 * (1.0 + wt * wt / 15.0);
    }
    const double x = 0.5 * wt;
    if (std::abs(x) > 300.0) {
        return t5 * form * 0.25 * std::exp(special::log_jacobian_g(x) - 4.0 * std::log(std::abs(x)));
    }
    return t5 * form * 0.25 * special::jacobian_kernel(x);
}

GeoParam log(const Event& q)
{
    if (!in_chronological_future(Event{}, q)) {
        throw NotChronologicalError("log: point is not in the chronological future of the origin");
    }
    const AxisData axis = axis_data(q);
    const double half = 0.5 * axis.w;
    const double phi = special::x_over_tanh(half);
    return {q.x * phi - q.y * half, q.y * phi - q.x * half, axis.w};
}

GeoParam past_rotation(const GeoParam& param) noexcept
{
    const double c = std::cosh(param.w);
    const double s = std::sinh(param.w);
    return {c * param.u - s * param.v, -s * param.u + c * param.v, param.w};
}

GeoParam past_rotation_inverse(const GeoParam& param) noexcept
{
    const double c = std::cosh(param.w);
    const double s = std::sinh(param.w);
    return {c * param.u + s * param.v, s * param.u + c * param.v, param.w};
}

GeoParam log_past(const Event& q)
{
    if (!in_chronological_future(q, Event{})) {
        throw NotChronologicalError("log_past: point is not in the chronological past of the origin");
    }
    return past_rotation_inverse(log(group_inv(q)));
}

double tau(const Event& p, const Event& q)
{
    const Event r = group_mul(group_inv(p), q);
    if (!in_chronological_future(Event{}, r)) {
        return 0.0;
    }
    const AxisData axis = axis_data(r);
    return axis.T * special::x_over_sinh(0.5 * axis.w);
}

GeodesicPath geodesic_between(const Event& p, const Event& q, std::size_t samples)
{
    if (samples < 2) {
        throw std::invalid_argument("geodesic_between: at least two samples are required");
    }
    const Event r = group_mul(group_inv(p), q);
    if (r.x == 0.0 && r.y == 0.0 && r.z == 0.0) {
        throw std::invalid_argument("geodesic_between: endpoints coincide");
    }
    if (!in_causal_future(p, q)) {
        throw NotCausalError("geodesic_between: q is not in the causal future of p");
    }
    GeodesicPath path;
    if (in_chronological_future(Event{}, r)) {
        Geodesic g{p, log(r), 1.0};
        path.kind = GeodesicKind::timelike;
        path.samples.times.resize(samples);
        path.samples.points.resize(samples);
        for (std::size_t i = 0; i < samples; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
            path.samples.times[i] = t;
            path.samples.points[i] = group_mul(p, exp_point(g.param, t));
        }
        path.geodesic = g;
        return path;
    }
    const IsoProblem prob{r.x, r.y, r.z};
    const IsoSolution sol = solve(prob);
    if (sol.kind == IsoCase::empty) {
        throw NotCausalError("geodesic_between: q is not in the causal future of p");
    }
    path.kind = sol.boost.has_value() ? GeodesicKind::broken_null : GeodesicKind::null_line;
    EventCurve lifted = lift(sample_solution(sol, prob, samples), Event{});
    for (Event& e : lifted.points) {
        e = group_mul(p, e);
    }
    path.samples = std::move(lifted);
    return path;
}

Event past_exp(const GeoParam& param, double t)
{
    if (!(t >= -1.0 && t <= 0.0)) {
        throw std::invalid_argument("past_exp: t must lie in [-1, 0]");
    }
    if (!in_timelike_domain(param)) {
        throw std::invalid_argument("past_exp: parameter must satisfy u > |v|");
    }
    return exp_point(param, t);
}

Event midpoint_map(const Event& anchor, const Event& p)
{
    if (!in_chronological_future(p, anchor)) {
        throw NotChronologicalError("midpoint_map: anchor is not in the chronological future of p");
    }
    const GeoParam param = log(group_mul(group_inv(p), anchor));
    return group_mul(p, exp_point(param, 0.5));
}

Event geodesic_inversion(const Event& center, const Event& p)
{
    const Event r = group_mul(group_inv(center), p);
    Event image;
    if (in_chronological_future(Event{}, r)) {
        image = exp_point(log(r), -1.0);
    } else if (in_chronological_future(r, Event{})) {
        image = exp_point(log_past(r), 1.0);
    } else {
        throw NotChronologicalError("geodesic_inversion: point is not chronologically related to the center");
    }
    return group_mul(center, image);
}

double cut_additivity_defect(const GeoParam& param, double t1, double t2, double t3)
{
    if (!(t1 >= 0.0 && t1 < t2 && t2 < t3)) {
        throw std::invalid_argument("cut_additivity_check: requires 0 <= t1 < t2 < t3");
    }
    if (!in_timelike_domain(param)) {
        throw std::invalid_argument("cut_additivity_check: parameter must satisfy u > |v|");
    }
    const Event g1 = exp_point(param, t1);
    const Event g2 = exp_point(param, t2);
    const Event g3 = exp_point(param, t3);
    const double t13 = tau(g1, g3);
    const double t12 = tau(g1, g2);
    const double t23 = tau(g2, g3);
    if (!(t13 > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(t13 - t12 - t23) / t13;
}

bool cut_additivity_check(const GeoParam& param, double t1, double t2, double t3)
{
    return cut_additivity_defect(param, t1, t2, t3) <= 1e-8;
}

std::string to_string(GeodesicKind kind)
{
    switch (kind) {
    case GeodesicKind::timelike:
        return "timelike";
    case GeodesicKind::null_line:
        return "null_line";
    case GeodesicKind::broken_null:
        return "broken_null";
    }
    return "timelike";
}

}  // namespace heis
