#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "heis/heisenberg_core.hpp"

namespace heis::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Event random_event(std::mt19937_64& rng, double scale = 2.0)
{
    return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

/// Point of I+(0) with x in [0.2, scale], |y| < x and |z| strictly inside
/// the cone.
inline Event random_future(std::mt19937_64& rng, double scale = 2.0, double margin = 0.98)
{
    const double x = uniform(rng, 0.2, scale);
    const double y = uniform(rng, -margin, margin) * x;
    const double zmax = 0.25 * (x - y) * (x + y);
    return {x, y, uniform(rng, -margin, margin) * zmax};
}

inline double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

inline PlanarCurve polyline(const std::vector<PlanarPoint>& pts)
{
    PlanarCurve c;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c.times.push_back(static_cast<double>(i));
        c.points.push_back(pts[i]);
    }
    return c;
}

}  // namespace heis::testing
