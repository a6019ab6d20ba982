#pragma once

#include <cstddef>
#include <optional>

#include "heis/heisenberg_core.hpp"
#include "heis/minkowski_iso.hpp"

namespace heis {

/// Exponential-map coordinates. (u, v) is the initial horizontal velocity
/// and w the curvature parameter; the timelike domain is u > |v|.
struct GeoParam {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

/// t -> base * exp_point(param, t) for t in (0, t_max].
struct Geodesic {
    Event base;
    GeoParam param;
    double t_max = 1.0;
};

enum class GeodesicKind { timelike, null_line, broken_null };

/// Result of geodesic_between. The timelike case carries an exponential
/// parametrization; every case carries samples from p to q.
struct GeodesicPath {
    GeodesicKind kind = GeodesicKind::timelike;
    std::optional<Geodesic> geodesic;
    EventCurve samples;
};

bool in_timelike_domain(const GeoParam& param) noexcept;

/// Sub-Lorentzian exponential map from the origin at time t. Any real t
/// is accepted; negative t gives the past-directed branch.
Event exp_point(const GeoParam& param, double t) noexcept;

/// Jacobian determinant of (u, v, w) -> exp_point((u, v, w), t).
double exp_jacobian_det(const GeoParam& param, double t) noexcept;

/// Inverse of exp_point(., 1) on I+(0). Throws NotChronologicalError for
/// q outside I+(0).
GeoParam log(const Event& q);

/// Parameter P with exp_point(P, -1) = q for q in I-(0). Throws
/// NotChronologicalError for q outside I-(0).
GeoParam log_past(const Event& q);

/// Hyperbolic rotation R with exp_point(P, -1) = -exp_point(R(P), 1).
GeoParam past_rotation(const GeoParam& param) noexcept;

/// Inverse of past_rotation.
GeoParam past_rotation_inverse(const GeoParam& param) noexcept;

/// Time separation. Zero when q is not in the causal future of p or when
/// (-p) * q lies on the null boundary.
double tau(const Event& p, const Event& q);

/// Maximizing geodesic from p to q. Throws NotCausalError if p is not in
/// the causal past of q and std::invalid_argument if p = q.
GeodesicPath geodesic_between(const Event& p, const Event& q, std::size_t samples = 65);

/// exp_point(param, t) for t in [-1, 0]. Throws std::invalid_argument for
/// t outside that range or param outside the timelike domain.
Event past_exp(const GeoParam& param, double t);

/// tau-midpoint of the geodesic from p to anchor. Throws
/// NotChronologicalError unless p << anchor.
Event midpoint_map(const Event& anchor, const Event& p);

/// Point on the other side of center along the geodesic through p. Throws
/// NotChronologicalError unless p and center are chronologically related.
Event geodesic_inversion(const Event& center, const Event& p);

/// Relative defect |tau13 - tau12 - tau23| / tau13 along t -> exp_point(param, t).
/// Throws std::invalid_argument unless 0 <= t1 < t2 < t3 and param is timelike.
double cut_additivity_defect(const GeoParam& param, double t1, double t2, double t3);

/// True when cut_additivity_defect is at most 1e-8.
bool cut_additivity_check(const GeoParam& param, double t1, double t2, double t3);

std::string to_string(GeodesicKind kind);

}  // namespace heis
