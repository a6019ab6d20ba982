#include "heis/heisenberg_core.hpp"

#include <cmath>

namespace heis {

Event group_mul(const Event& p, const Event& q) noexcept
{
    return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y)};
}

Event group_inv(const Event& p) noexcept
{
    return {-p.x, -p.y, -p.z};
}

Event dilate(double lambda, const Event& p)
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("dilate: lambda must be positive");
    }
    return {lambda * p.x, lambda * p.y, lambda * lambda * p.z};
}

CausalClass causal_class(const HorizontalVector& w) noexcept
{
    CausalClass out;
    if (w.u == 0.0 && w.v == 0.0) {
        return out;
    }
    const double form = (w.v - w.u) * (w.v + w.u);
    if (form < 0.0) {
        out.tag = CausalTag::timelike;
    } else if (form == 0.0) {
        out.tag = CausalTag::null;
    } else {
        out.tag = CausalTag::spacelike;
    }
    out.future_directed = w.u > 0.0;
    return out;
}

double causal_form(const Event& r) noexcept
{
    return (r.y - r.x) * (r.y + r.x) + 4.0 * std::abs(r.z);
}

namespace {

double causal_scale(const Event& r) noexcept
{
    return r.x * r.x + r.y * r.y + 4.0 * std::abs(r.z);
}

}  // namespace

bool on_null_boundary(const Event& r) noexcept
{
    return std::abs(causal_form(r)) <= kNullTolerance * causal_scale(r);
}

bool in_causal_future(const Event& p, const Event& q) noexcept
{
    const Event r = group_mul(group_inv(p), q);
    if (r.x < 0.0) {
        return false;
    }
    return causal_form(r) <= kNullTolerance * causal_scale(r);
}

bool in_chronological_future(const Event& p, const Event& q) noexcept
{
    const Event r = group_mul(group_inv(p), q);
    if (!(r.x > 0.0)) {
        return false;
    }
    return causal_form(r) < -kNullTolerance * causal_scale(r);
}

template <class Point>
void validate_curve(const SampledCurve<Point>& curve)
{
    if (curve.points.size() != curve.times.size()) {
        throw std::invalid_argument("curve: times and points differ in length");
    }
    if (curve.points.size() < 2) {
        throw std::invalid_argument("curve: at least two samples are required");
    }
    for (std::size_t i = 1; i < curve.times.size(); ++i) {
        if (!(curve.times[i] > curve.times[i - 1])) {
            throw std::invalid_argument("curve: times must be strictly increasing");
        }
    }
}

template void validate_curve<PlanarPoint>(const PlanarCurve&);
template void validate_curve<Event>(const EventCurve&);

double signed_area(const PlanarCurve& curve)
{
    validate_curve(curve);
    const auto& pts = curve.points;
    double twice = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        twice += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
    }
    twice += pts.back().x * pts.front().y - pts.front().x * pts.back().y;
    return 0.5 * twice;
}

EventCurve lift(const PlanarCurve& curve, const Event& base)
{
    validate_curve(curve);
    const PlanarPoint& start = curve.points.front();
    const double scale = 1.0 + std::abs(base.x) + std::abs(base.y);
    if (std::abs(start.x - base.x) > 1e-12 * scale || std::abs(start.y - base.y) > 1e-12 * scale) {
        throw std::invalid_argument("lift: curve does not start at the projection of base");
    }
    EventCurve out;
    out.times = curve.times;
    out.points.reserve(curve.points.size());
    double z = base.z;
    out.points.push_back({start.x, start.y, z});
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const PlanarPoint& a = curve.points[i - 1];
        const PlanarPoint& b = curve.points[i];
        z += 0.5 * (a.x * b.y - b.x * a.y);
        out.points.push_back({b.x, b.y, z});
    }
    return out;
}

PlanarCurve project(const EventCurve& curve)
{
    PlanarCurve out;
    out.times = curve.times;
    out.points.reserve(curve.points.size());
    for (const Event& e : curve.points) {
        out.points.push_back({e.x, e.y});
    }
    return out;
}

namespace {

double segment_length(double dx, double dy)
{
    const double form = (dx - dy) * (dx + dy);
    const double scale = dx * dx + dy * dy;
    if (dx < 0.0 || form < -kNullTolerance * scale) {
        throw NotCausalError("lorentzian_length: segment is not future-directed causal");
    }
    return form > 0.0 ? std::sqrt(form) : 0.0;
}

}  // namespace

double lorentzian_length(const PlanarCurve& curve)
{
    validate_curve(curve);
    double total = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        total += segment_length(curve.points[i].x - curve.points[i - 1].x,
                                curve.points[i].y - curve.points[i - 1].y);
    }
    return total;
}

double lorentzian_length(const EventCurve& curve)
{
    return lorentzian_length(project(curve));
}

std::string to_string(CausalTag tag)
{
    switch (tag) {
    case CausalTag::timelike:
        return "timelike";
    case CausalTag::null:
        return "null";
    case CausalTag::spacelike:
        return "spacelike";
    case CausalTag::zero:
        return "zero";
    }
    return "zero";
}

}  // namespace heis
