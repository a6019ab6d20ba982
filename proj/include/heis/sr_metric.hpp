#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "heis/heisenberg_core.hpp"

namespace heis {

/// Anisotropic box [-r, r] x [-r, r] x [-r^2, r^2].
struct BoxSpec {
    double r = 0.0;
};

/// Causal diamond J(p, q) given by its ordered vertices.
struct Diamond {
    Event p;
    Event q;
};

struct DiamondBoxReport {
    bool inclusion_pass = true;
    std::size_t samples = 0;
    std::size_t draws = 0;
    /// x-coordinate of (-p) * q, the side of the sharper box.
    double box_side = 0.0;
    /// Sub-Riemannian distance d(p, q).
    double distance = 0.0;
    std::size_t sharp_box_violations = 0;
    std::size_t distance_box_violations = 0;
    /// First offending sample in the coordinates of (-p) * J(p, q).
    std::optional<Event> counterexample;
};

struct InnerRadius {
    /// Minimum of d(0, .) over the boundary after local refinement.
    double rho = 0.0;
    /// Minimum over the grid alone.
    double grid_rho = 0.0;
    /// Grid spacing in the boundary parameters.
    double resolution = 0.0;
    std::size_t points = 0;
};

/// Carnot-Caratheodory distance from the origin.
double sr_distance_from_origin(const Event& r);

/// Carnot-Caratheodory distance, reduced to d(0, (-p) * q).
double sr_distance(const Event& p, const Event& q);

bool box_contains(const BoxSpec& spec, const Event& p) noexcept;

/// Samples n points of J(p, q) by rejection from the set where x + y lies
/// in [0, a + b], x - y in [0, a - b] and |z| <= (a^2 - b^2)/4, with
/// (a, b, c) = (-p) * q, and checks each against Box(a) and Box(d(p, q)).
/// Throws NotCausalError unless p <= q.
DiamondBoxReport diamond_in_box_check(const Event& p, const Event& q, std::size_t n, std::uint64_t seed);

/// Largest rho with B(0, rho) inside J((-1, 0, 0), (1, 0, 0)), from a scan of
/// the boundary with (grid + 1)^2 points on each of its four pieces. The
/// default grid result is computed once and cached.
InnerRadius unit_diamond_inner_radius(std::size_t grid = 500);

/// Diamond J(p * (-D r, 0, 0), p * (D r, 0, 0)) with D = 1 / rho, which
/// contains B(p, r). Throws std::invalid_argument for r <= 0.
Diamond ball_in_diamond(const Event& p, double r);

/// Smallest C with Box(s) inside B(0, C s), estimated on a grid of the
/// faces z = +-1 of Box(1).
double ball_box_constant(std::size_t grid = 200);

/// Lebesgue volume of the sub-Riemannian ball of radius r.
double sr_ball_volume(double r);

}  // namespace heis
