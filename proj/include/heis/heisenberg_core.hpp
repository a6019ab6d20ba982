#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

/// Point (x, y, z) of the Heisenberg group. x is the timelike coordinate,
/// z the vertical coordinate measured in units of area.
struct Event {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Point of the Minkowski plane with quadratic form -x^2 + y^2.
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Horizontal vector u X + v Y with Lorentzian square -u^2 + v^2.
struct HorizontalVector {
    double u = 0.0;
    double v = 0.0;
};

enum class CausalTag { timelike, null, spacelike, zero };

struct CausalClass {
    CausalTag tag = CausalTag::zero;
    bool future_directed = false;
};

/// Time-stamped polyline. Times are strictly increasing and there are at
/// least two samples.
template <class Point>
struct SampledCurve {
    std::vector<double> times;
    std::vector<Point> points;
};

using PlanarCurve = SampledCurve<PlanarPoint>;
using EventCurve = SampledCurve<Event>;

/// Absolute tolerance used for comparisons on the null boundary
/// -x^2 + y^2 + 4|z| = 0. It is applied to the quadratic form divided by
/// its natural scale x^2 + y^2 + 4|z|, so the predicates stay
/// dilation invariant.
inline constexpr double kNullTolerance = 1e-12;

/// Raised when two events are not causally related but the operation
/// requires it.
class NotCausalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an event is not in the chronological future required by
/// the operation.
class NotChronologicalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when the isoperimetric problem has no admissible curve.
class NoSolutionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Event group_mul(const Event& p, const Event& q) noexcept;
Event group_inv(const Event& p) noexcept;

/// Anisotropic dilation (lambda x, lambda y, lambda^2 z).
/// Throws std::invalid_argument for lambda <= 0.
Event dilate(double lambda, const Event& p);

CausalClass causal_class(const HorizontalVector& w) noexcept;

/// Value of -x^2 + y^2 + 4|z| for r = (-p) * q.
double causal_form(const Event& r) noexcept;

/// True when r lies within kNullTolerance of the null boundary of J+(0)
/// or J-(0).
bool on_null_boundary(const Event& r) noexcept;

/// p <= q, tested on (-p) * q against the closed cone of J+(0).
bool in_causal_future(const Event& p, const Event& q) noexcept;

/// p << q, the strict analogue of in_causal_future.
bool in_chronological_future(const Event& p, const Event& q) noexcept;

/// Signed area enclosed by the polyline and the chord closing it,
/// positive for counterclockwise loops.
double signed_area(const PlanarCurve& curve);

/// Horizontal lift starting at base. The curve must start at the planar
/// projection of base; otherwise std::invalid_argument is thrown.
EventCurve lift(const PlanarCurve& curve, const Event& base);

/// Planar projection of a curve in the group.
PlanarCurve project(const EventCurve& curve);

/// Sum of sqrt(dx^2 - dy^2) over segments. Throws NotCausalError when a
/// segment has dx < |dy| beyond the null tolerance.
double lorentzian_length(const PlanarCurve& curve);
double lorentzian_length(const EventCurve& curve);

/// Throws std::invalid_argument unless times are strictly increasing,
/// sizes match and there are at least two samples.
template <class Point>
void validate_curve(const SampledCurve<Point>& curve);

std::string to_string(CausalTag tag);

}  // namespace heis
